#include "fpd/metrics.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace fpd {

ReferenceFront build_reference_front(const std::vector<std::vector<Vector>>& solver_fronts) {
    std::vector<DecisionPoint> pool;
    std::uint64_t id = 1;
    for (const auto& front : solver_fronts)
        for (const auto& fx : front) {
            DecisionPoint p;
            p.fx = fx;
            p.id = id++;
            pool.push_back(std::move(p));
        }
    ReferenceFront ref;
    ref.points = filter_nondominated(pool);
    return ref;
}

double purity(const std::vector<Vector>& solver_fx, const ReferenceFront& reference) {
    if (solver_fx.empty()) throw std::invalid_argument("purity: empty solver front");
    std::size_t hits = 0;
    for (const auto& fx : solver_fx)
        for (const auto& r : reference.points)
            if (r.fx == fx) {
                ++hits;
                break;
            }
    return double(hits) / double(solver_fx.size());
}

double purity(const FrontSet& solver_front, const ReferenceFront& reference) {
    std::vector<Vector> fx;
    fx.reserve(solver_front.size());
    for (const auto& p : solver_front) fx.push_back(p.fx);
    return purity(fx, reference);
}

double nf_mean(std::uint64_t objective_evals, std::size_t processed) {
    if (processed == 0) throw std::invalid_argument("nf_mean: no processed points");
    return double(objective_evals) / double(processed);
}

double nf_mean(const RunTrace& trace) {
    return nf_mean(trace.total_objective_evals, trace.total_processed);
}

double alpha_mean(double alpha_sum, std::size_t alpha_count) {
    if (alpha_count == 0) throw std::invalid_argument("alpha_mean: no line searches executed");
    return alpha_sum / double(alpha_count);
}

double alpha_mean(const RunTrace& trace) {
    double sum = 0.0;
    std::size_t count = 0;
    for (const auto& r : trace.records) {
        sum += r.alpha_sum;
        count += r.alpha_count;
    }
    return alpha_mean(sum, count);
}

double transform_purity(double raw) {
    if (raw < 0.0) throw std::invalid_argument("transform_purity: negative purity");
    return raw == 0.0 ? kZeroPuritySentinel : 1.0 / raw;
}

double transform_alpha(double raw) {
    if (raw <= 0.0) throw std::invalid_argument("transform_alpha: nonpositive mean step");
    return 1.0 / raw;
}

double transform_hv(double v_reference, double v_solver) {
    return v_reference - v_solver + 1e-7;
}

std::vector<ProfilePoint> performance_profiles(const MetricMatrix& matrix) {
    const std::size_t np = matrix.instances.size();
    const std::size_t ns = matrix.solvers.size();
    if (np == 0 || ns == 0) throw std::invalid_argument("performance_profiles: empty matrix");
    if (matrix.values.size() != np)
        throw std::invalid_argument("performance_profiles: row count mismatch");

    // ratios[p][s] = value / per-problem best
    std::vector<std::vector<double>> ratios(np, std::vector<double>(ns));
    for (std::size_t p = 0; p < np; ++p) {
        if (matrix.values[p].size() != ns)
            throw std::invalid_argument("performance_profiles: column count mismatch");
        double best = matrix.values[p][0];
        for (double v : matrix.values[p]) {
            if (!(v > 0.0))
                throw std::invalid_argument("performance_profiles: values must be positive");
            best = std::min(best, v);
        }
        for (std::size_t s = 0; s < ns; ++s) ratios[p][s] = matrix.values[p][s] / best;
    }

    std::set<double> taus;
    for (const auto& row : ratios)
        for (double r : row) taus.insert(r);

    std::vector<ProfilePoint> out;
    for (std::size_t s = 0; s < ns; ++s)
        for (double tau : taus) {
            std::size_t within = 0;
            for (std::size_t p = 0; p < np; ++p)
                if (ratios[p][s] <= tau) ++within;
            out.push_back({matrix.solvers[s], tau, double(within) / double(np)});
        }
    return out;
}

}  // namespace fpd
