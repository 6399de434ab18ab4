#include "fpd/direction.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace fpd {
namespace {

// Euclidean projection onto the probability simplex (Held et al. style sort method).
Vector project_simplex(Vector y) {
    const std::size_t k = y.size();
    Vector u = y;
    std::sort(u.begin(), u.end(), std::greater<double>());
    double cum = 0.0, tau = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        cum += u[i];
        const double t = (cum - 1.0) / double(i + 1);
        if (u[i] - t > 0.0) tau = t;
    }
    for (std::size_t i = 0; i < k; ++i) y[i] = std::max(y[i] - tau, 0.0);
    // guard against drift so the iterate stays a distribution
    double s = std::accumulate(y.begin(), y.end(), 0.0);
    if (s > 0.0)
        for (double& v : y) v /= s;
    else
        std::fill(y.begin(), y.end(), 1.0 / double(k));
    return y;
}

struct Subproblem {
    const Matrix& jac;
    const std::vector<int>& subset;
    Vector lo, hi;  // feasible step box l - x, u - x

    // d*(lambda): separable minimizer of lambda^T J d + 0.5||d||^2 over the step box
    Vector primal_step(const Vector& lambda) const {
        const std::size_t n = jac.cols;
        Vector w(n, 0.0);
        for (std::size_t r = 0; r < subset.size(); ++r) {
            const double* row = jac.row(std::size_t(subset[r]));
            for (std::size_t i = 0; i < n; ++i) w[i] += row[i] * lambda[r];
        }
        Vector d(n);
        for (std::size_t i = 0; i < n; ++i) d[i] = std::min(std::max(-w[i], lo[i]), hi[i]);
        return d;
    }

    // dual value q(lambda) with its minimizing d
    double dual_value(const Vector& lambda, Vector& d) const {
        d = primal_step(lambda);
        double v = 0.5 * norm2_sq(d);
        for (std::size_t r = 0; r < subset.size(); ++r)
            v += lambda[r] * dot(jac.row(std::size_t(subset[r])), d);
        return v;
    }

    double max_g_dot(const Vector& d) const {
        double m = -std::numeric_limits<double>::infinity();
        for (int j : subset) m = std::max(m, dot(jac.row(std::size_t(j)), d));
        return m;
    }

    double primal_value(const Vector& d) const { return max_g_dot(d) + 0.5 * norm2_sq(d); }

    // dq/dlambda = J_I d*(lambda)
    Vector dual_gradient(const Vector& lambda) const {
        const Vector d = primal_step(lambda);
        Vector g(subset.size());
        for (std::size_t r = 0; r < subset.size(); ++r)
            g[r] = dot(jac.row(std::size_t(subset[r])), d);
        return g;
    }
};

DirectionOutcome solve(const Vector& x, const Matrix& jac, const std::vector<int>& subset,
                       const BoxBounds& bounds, const SolverSettings& settings) {
    const std::size_t n = jac.cols;
    Subproblem sp{jac, subset, Vector(n), Vector(n)};
    for (std::size_t i = 0; i < n; ++i) {
        sp.lo[i] = bounds.lower[i] - x[i];
        sp.hi[i] = bounds.upper[i] - x[i];
        if (sp.lo[i] > 0.0) sp.lo[i] = 0.0;  // x is feasible; guard roundoff
        if (sp.hi[i] < 0.0) sp.hi[i] = 0.0;
    }

    DirectionOutcome out;
    out.subset = subset;

    Vector v;
    if (subset.size() == 1) {
        // single objective: separable closed form
        v = Vector(n);
        const double* g = jac.row(std::size_t(subset[0]));
        for (std::size_t i = 0; i < n; ++i) v[i] = std::min(std::max(-g[i], sp.lo[i]), sp.hi[i]);
    } else {
        // Maximize the concave dual q over the simplex.  best_q (dual values seen) and
        // best_primal (primal candidates seen) improve independently; the certificate
        // gap best_primal - best_q bounds the suboptimality of the returned direction.
        // The tolerance is taken relative to max(1, |best_primal|): both the dual
        // curvature and the primal round-off scale with the squared gradient norm, so
        // an absolute gap is unattainable for large gradients, while near stationarity
        // (the regime the certificates care about) the test stays absolute.
        const std::size_t k = subset.size();
        if (k > 3) throw std::invalid_argument("direction solver: more than 3 objectives");
        double best_q = -std::numeric_limits<double>::infinity();
        double best_primal = std::numeric_limits<double>::infinity();
        Vector best_v, best_lambda;
        auto consider = [&](const Vector& lambda) {
            Vector d;
            const double q = sp.dual_value(lambda, d);
            if (q > best_q) {
                best_q = q;
                best_lambda = lambda;
            }
            const double p = sp.primal_value(d);
            if (p < best_primal) {
                best_primal = p;
                best_v = std::move(d);
            }
            return q;
        };

        // Exact maximization along the simplex edge between weight rows ra and rb
        // (other weights zero).  q restricted to the edge is concave, so its derivative
        // phi(s) = (g_rb - g_ra)^T d(lambda(s)) is nonincreasing, continuous and
        // piecewise linear: bisect on its sign change, which floating point resolves
        // to the last representable interval.
        auto edge_bisect = [&](std::size_t ra, std::size_t rb) {
            const double* ga = jac.row(std::size_t(subset[ra]));
            const double* gb = jac.row(std::size_t(subset[rb]));
            auto lambda_of = [&](double s) {
                Vector l(k, 0.0);
                l[ra] = 1.0 - s;
                l[rb] = s;
                return l;
            };
            auto phi_of = [&](double s) {
                const Vector d = sp.primal_step(lambda_of(s));
                double p = 0.0;
                for (std::size_t i = 0; i < n; ++i) p += (gb[i] - ga[i]) * d[i];
                return p;
            };
            consider(lambda_of(0.0));
            consider(lambda_of(1.0));
            if (phi_of(0.0) <= 0.0 || phi_of(1.0) >= 0.0) return;  // vertex optimum
            double s_lo = 0.0, s_hi = 1.0;
            for (int i = 0; i < 200; ++i) {
                const double mid = 0.5 * (s_lo + s_hi);
                if (mid <= s_lo || mid >= s_hi) break;
                if (phi_of(mid) >= 0.0)
                    s_lo = mid;
                else
                    s_hi = mid;
            }
            consider(lambda_of(s_lo));
            consider(lambda_of(s_hi));
        };

        if (k == 2) {
            edge_bisect(0, 1);
        } else if (k == 3) {
            for (std::size_t ra = 0; ra < k; ++ra)
                for (std::size_t rb = ra + 1; rb < k; ++rb) edge_bisect(ra, rb);

            // Interior optima: parametrize lambda = (1-a-b, a, b) so q is jointly
            // concave in (a, b) over the triangle a, b >= 0, a + b <= 1.  The inner
            // sweep maximizes over a at fixed b by bisecting on the nonincreasing
            // derivative (g1 - g0)^T d; the partial maximum H(b) is concave, so the
            // outer level bisects on its envelope derivative.  That derivative is
            // (g2 - g0)^T d at the inner argmax, except when the argmax sits on the
            // diagonal a = 1 - b: there the feasible interval moves with b and the
            // argmax tracks it, so the derivative becomes (g2 - g1)^T d.
            const double* g0 = jac.row(std::size_t(subset[0]));
            const double* g1 = jac.row(std::size_t(subset[1]));
            const double* g2 = jac.row(std::size_t(subset[2]));
            auto lambda_of = [&](double a, double b) { return Vector{1.0 - a - b, a, b}; };
            auto slope = [&](const double* gp, const double* gm, const Vector& d) {
                double s = 0.0;
                for (std::size_t i = 0; i < n; ++i) s += (gp[i] - gm[i]) * d[i];
                return s;
            };
            auto inner_best_a = [&](double b) {
                const double a_max = 1.0 - b;
                auto phi = [&](double a) {
                    return slope(g1, g0, sp.primal_step(lambda_of(a, b)));
                };
                double a = 0.0;
                if (phi(0.0) <= 0.0)
                    a = 0.0;
                else if (phi(a_max) >= 0.0)
                    a = a_max;
                else {
                    double a_lo = 0.0, a_hi = a_max;
                    for (int i = 0; i < 200; ++i) {
                        const double mid = 0.5 * (a_lo + a_hi);
                        if (mid <= a_lo || mid >= a_hi) break;
                        if (phi(mid) >= 0.0)
                            a_lo = mid;
                        else
                            a_hi = mid;
                    }
                    a = a_lo;
                }
                consider(lambda_of(a, b));
                return a;
            };
            auto psi = [&](double b) {
                const double a = inner_best_a(b);
                const Vector d = sp.primal_step(lambda_of(a, b));
                const double s_int = slope(g2, g0, d);
                if (a < 1.0 - b) return s_int;
                const double s_diag = slope(g2, g1, d);
                // a == 1 - b == 0 happens only at b == 1, where both selections are
                // one-sided; take the smaller so a profitable interior is not missed
                return a > 0.0 ? s_diag : std::min(s_int, s_diag);
            };
            if (psi(0.0) > 0.0 && psi(1.0) < 0.0) {
                double b_lo = 0.0, b_hi = 1.0;
                for (int i = 0; i < 200; ++i) {
                    const double mid = 0.5 * (b_lo + b_hi);
                    if (mid <= b_lo || mid >= b_hi) break;
                    if (psi(mid) >= 0.0)
                        b_lo = mid;
                    else
                        b_hi = mid;
                }
                psi(b_lo);
                psi(b_hi);
            }

            // projected gradient ascent polish in case a certificate gap remains
            Vector lambda = best_lambda;
            double step = 1.0;
            Vector d;
            int it = 0;
            for (; it < settings.max_dual_iters; ++it) {
                if (best_q >= -settings.dual_tolerance ||
                    best_primal - best_q <=
                        settings.dual_tolerance * std::max(1.0, std::fabs(best_primal)))
                    break;
                const Vector grad = sp.dual_gradient(lambda);
                double q_cur = sp.dual_value(lambda, d);
                bool moved = false;
                for (int bt = 0; bt < 60 && !moved; ++bt) {
                    Vector trial(lambda.size());
                    for (std::size_t r = 0; r < lambda.size(); ++r)
                        trial[r] = lambda[r] + step * grad[r];
                    trial = project_simplex(std::move(trial));
                    const double q_new = sp.dual_value(trial, d);
                    if (q_new > q_cur) {
                        lambda = std::move(trial);
                        q_cur = q_new;
                        moved = true;
                    } else {
                        step *= 0.5;
                    }
                }
                consider(lambda);
                if (!moved) break;  // projected ascent fixed point within step resolution
                step = std::min(step * 2.0, 1e6);
            }
        }
        if (best_q >= -settings.dual_tolerance) {
            // theta* >= q(lambda) for every lambda, so the dual already certifies
            // near-stationarity; the primal witness only carries round-off here
            out.v = Vector(n, 0.0);
            out.theta = 0.0;
            out.d_value = 0.0;
            return out;
        }
        if (best_primal - best_q > settings.dual_tolerance * std::max(1.0, std::fabs(best_primal)))
            throw std::runtime_error("direction solver: dual ascent did not converge");
        v = std::move(best_v);
    }

    const double primal = sp.primal_value(v);
    if (primal >= 0.0) {
        // no feasible descent within tolerance: report exact stationarity
        out.v = Vector(n, 0.0);
        out.theta = 0.0;
        out.d_value = 0.0;
        return out;
    }
    out.v = std::move(v);
    out.theta = primal;
    out.d_value = sp.max_g_dot(out.v);
    return out;
}

}  // namespace

DirectionOutcome common_direction(const Vector& x, const Matrix& jac, const BoxBounds& bounds,
                                  const SolverSettings& settings) {
    std::vector<int> all(jac.rows);
    std::iota(all.begin(), all.end(), 0);
    return solve(x, jac, all, bounds, settings);
}

DirectionOutcome partial_direction(const Vector& x, const Matrix& jac,
                                   const std::vector<int>& subset, const BoxBounds& bounds,
                                   const SolverSettings& settings) {
    if (subset.empty()) throw std::invalid_argument("partial_direction: empty subset");
    return solve(x, jac, subset, bounds, settings);
}

std::vector<DirectionOutcome> proper_subsets_with_descent(const Vector& x, const Matrix& jac,
                                                          const BoxBounds& bounds,
                                                          const SolverSettings& settings) {
    const std::size_t m = jac.rows;
    std::vector<DirectionOutcome> out;
    for (unsigned mask = 1; mask + 1 < (1u << m); ++mask) {
        std::vector<int> subset;
        for (std::size_t j = 0; j < m; ++j)
            if (mask & (1u << j)) subset.push_back(int(j));
        DirectionOutcome d = solve(x, jac, subset, bounds, settings);
        if (d.theta < -settings.dual_tolerance) out.push_back(std::move(d));
    }
    return out;
}

BigThetaResult big_theta(FrontSet& set, const Problem& problem, const SolverSettings& settings) {
    if (set.empty()) throw std::invalid_argument("big_theta: empty set");
    BigThetaResult res;
    res.value = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < set.size(); ++i) {
        DecisionPoint& p = set[i];
        if (!p.jac_cache) p.jac_cache = std::make_shared<Matrix>(problem.jacobian(p.x));
        if (!p.dir_cache)
            p.dir_cache = std::make_shared<DirectionOutcome>(
                common_direction(p.x, *p.jac_cache, problem.bounds(), settings));
        if (p.dir_cache->theta < res.value) {
            res.value = p.dir_cache->theta;
            res.argmin = i;
        }
    }
    return res;
}

}  // namespace fpd
