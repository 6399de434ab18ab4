#pragma once

#include <cstdint>
#include <optional>

#include "fpd/pareto.hpp"
#include "fpd/problem.hpp"

namespace fpd {

struct ArmijoParams {
    double alpha0 = 1.0;
    double delta = 0.5;
    double gamma = 1e-4;
    int max_backtracks = 60;
};

struct SearchResult {
    double alpha = 0.0;
    int trials = 0;  // number of objective evaluations performed by the search
    bool success = false;
    std::optional<std::uint64_t> reference_id;  // accepting reference (nonmonotone only)
    Vector trial_x;   // accepted point, already clamped into the box
    Vector trial_fx;  // its objective vector (reused by the caller, never re-evaluated)
};

// Classical multiobjective Armijo backtracking:
//   accept the largest alpha = alpha0 * delta^h with
//   F(x + alpha v) <= F(x) + gamma * alpha * d_value  in every component.
// Throws if the backtracking budget is exhausted (signals d_value >= 0 upstream).
SearchResult monotone_armijo(const Problem& problem, const Vector& x, const Vector& fx,
                             const Vector& v, double d_value, const ArmijoParams& params);

// Nonmonotone variant: the decrease is measured against some reference c among the
// candidates with F(x) <= F(c); the reference may differ between alpha trials, and the
// first satisfying candidate in set order is recorded.  Throws if no candidate is
// eligible (the caller should have dispatched to the monotone search).
SearchResult nonmonotone_armijo(const Problem& problem, const Vector& x, const Vector& fx,
                                const Vector& v, double d_value, const FrontSet& candidates,
                                const ArmijoParams& params);

// Exploration search along a partial direction: accept the largest alpha whose trial
// point strictly improves at least one objective against every member of current_set.
// On budget exhaustion returns success=false (the caller skips the insertion).
SearchResult exploration_search(const Problem& problem, const Vector& z, const Vector& v_partial,
                                const FrontSet& current_set, const ArmijoParams& params);

}  // namespace fpd
