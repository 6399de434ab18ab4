#include "fpd/line_search.hpp"

#include <stdexcept>

namespace fpd {
namespace {

Vector trial_point(const Problem& problem, const Vector& x, const Vector& v, double alpha) {
    Vector y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) y[i] = x[i] + alpha * v[i];
    return problem.bounds().clamp(y);  // exact feasibility regardless of roundoff
}

bool armijo_holds(const Vector& trial_fx, const Vector& ref_fx, double slack) {
    for (std::size_t j = 0; j < trial_fx.size(); ++j)
        if (!(trial_fx[j] <= ref_fx[j] + slack)) return false;
    return true;
}

}  // namespace

SearchResult monotone_armijo(const Problem& problem, const Vector& x, const Vector& fx,
                             const Vector& v, double d_value, const ArmijoParams& params) {
    if (!(d_value < 0.0))
        throw std::invalid_argument("monotone_armijo: nonnegative directional value");
    SearchResult res;
    double alpha = params.alpha0;
    for (int h = 0; h < params.max_backtracks; ++h, alpha *= params.delta) {
        Vector y = trial_point(problem, x, v, alpha);
        Vector fy = problem.evaluate(y);
        ++res.trials;
        if (armijo_holds(fy, fx, params.gamma * alpha * d_value)) {
            res.alpha = alpha;
            res.success = true;
            res.trial_x = std::move(y);
            res.trial_fx = std::move(fy);
            return res;
        }
    }
    throw std::runtime_error("monotone_armijo: backtracking budget exhausted");
}

SearchResult nonmonotone_armijo(const Problem& problem, const Vector& x, const Vector& fx,
                                const Vector& v, double d_value, const FrontSet& candidates,
                                const ArmijoParams& params) {
    if (!(d_value < 0.0))
        throw std::invalid_argument("nonmonotone_armijo: nonnegative directional value");
    // eligibility is fixed up front: references c with F(x) <= F(c)
    std::vector<const DecisionPoint*> eligible;
    for (const auto& c : candidates)
        if (leq(fx, c.fx)) eligible.push_back(&c);
    if (eligible.empty())
        throw std::invalid_argument("nonmonotone_armijo: no eligible reference");

    SearchResult res;
    double alpha = params.alpha0;
    for (int h = 0; h < params.max_backtracks; ++h, alpha *= params.delta) {
        Vector y = trial_point(problem, x, v, alpha);
        Vector fy = problem.evaluate(y);
        ++res.trials;
        for (const DecisionPoint* c : eligible) {
            if (armijo_holds(fy, c->fx, params.gamma * alpha * d_value)) {
                res.alpha = alpha;
                res.success = true;
                res.reference_id = c->id;
                res.trial_x = std::move(y);
                res.trial_fx = std::move(fy);
                return res;
            }
        }
    }
    throw std::runtime_error("nonmonotone_armijo: backtracking budget exhausted");
}

SearchResult exploration_search(const Problem& problem, const Vector& z, const Vector& v_partial,
                                const FrontSet& current_set, const ArmijoParams& params) {
    SearchResult res;
    double alpha = params.alpha0;
    for (int h = 0; h < params.max_backtracks; ++h, alpha *= params.delta) {
        Vector y = trial_point(problem, z, v_partial, alpha);
        Vector fy = problem.evaluate(y);
        ++res.trials;
        bool ok = true;
        for (const auto& member : current_set) {
            bool some_strict = false;
            for (std::size_t j = 0; j < fy.size() && !some_strict; ++j)
                if (fy[j] < member.fx[j]) some_strict = true;
            if (!some_strict) {
                ok = false;
                break;
            }
        }
        if (ok) {
            res.alpha = alpha;
            res.success = true;
            res.trial_x = std::move(y);
            res.trial_fx = std::move(fy);
            return res;
        }
    }
    res.success = false;  // caller skips the insertion
    return res;
}

}  // namespace fpd
