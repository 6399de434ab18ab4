#pragma once

#include <cstdint>
#include <vector>

#include "fpd/box.hpp"
#include "fpd/pareto.hpp"
#include "fpd/problem.hpp"

namespace fpd {

// Result of one descent-direction subproblem:
//   minimize over feasible d     max_{j in subset} g_j . d  +  0.5 ||d||^2
// theta is the achieved objective value (<= 0 always; exactly 0 with v = 0 at a
// stationary point), d_value = max_j g_j . v.  By construction d_value <= theta.
struct DirectionOutcome {
    Vector v;
    double theta = 0.0;
    double d_value = 0.0;
    std::vector<int> subset;  // objective indices (0-based), ascending
};

struct SolverSettings {
    double dual_tolerance = 1e-8;
    int max_dual_iters = 10000;
};

// Common descent direction: subset = all objectives.
DirectionOutcome common_direction(const Vector& x, const Matrix& jac, const BoxBounds& bounds,
                                  const SolverSettings& settings);

// Partial descent direction for a nonempty objective subset (0-based indices).
// With the full subset this coincides with common_direction.
DirectionOutcome partial_direction(const Vector& x, const Matrix& jac,
                                   const std::vector<int>& subset, const BoxBounds& bounds,
                                   const SolverSettings& settings);

// All proper nonempty objective subsets whose partial direction has theta < -dual_tolerance,
// ordered by ascending subset bitmask for reproducibility.
std::vector<DirectionOutcome> proper_subsets_with_descent(const Vector& x, const Matrix& jac,
                                                          const BoxBounds& bounds,
                                                          const SolverSettings& settings);

// Theta(X) = min over the set of each point's common-direction theta.  Fills the
// per-point jac/dir caches in place so later phases can reuse them.
struct BigThetaResult {
    double value = 0.0;
    std::size_t argmin = 0;
};

BigThetaResult big_theta(FrontSet& set, const Problem& problem, const SolverSettings& settings);

}  // namespace fpd
