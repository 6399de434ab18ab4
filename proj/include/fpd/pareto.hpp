#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "fpd/linalg.hpp"

namespace fpd {

struct DirectionOutcome;  // defined in direction.hpp; cached here per point

// One member of a solution set: decision vector, its cached objective vector, and a
// unique id for identity tracking across sets.  The Jacobian and common-direction
// caches are shared across copies of the same point so repeated iterations never
// recompute them (the caching assumption the per-iteration processing order relies on).
struct DecisionPoint {
    Vector x;
    Vector fx;
    std::uint64_t id = 0;

    std::shared_ptr<const Matrix> jac_cache;
    std::shared_ptr<const DirectionOutcome> dir_cache;
};

// Ordered collection of mutually nondominated points with pairwise distinct fx.
// Kept as a plain vector; the invariant is maintained by insert_and_filter /
// filter_nondominated rather than by the type itself.
using FrontSet = std::vector<DecisionPoint>;

// u <= v componentwise
bool leq(const Vector& u, const Vector& v);
// u < v componentwise
bool strictly_less(const Vector& u, const Vector& v);
// u dominates v in the weak-Pareto sense: u <= v and u != v
bool dominates(const Vector& u, const Vector& v);

struct Comparison {
    bool equal = false;
    bool leq = false;            // u <= v
    bool strictly_less = false;  // u < v
    bool dominates = false;      // u <= v and u != v
    bool incomparable() const { return !leq && !reverse_leq; }
    bool reverse_leq = false;  // v <= u, so callers can classify both directions
};

Comparison compare(const Vector& u, const Vector& v);

// Points not dominated by any other in the list; equal-fx duplicates collapse to the
// earliest occurrence.  O(N^2) reference implementation.
FrontSet filter_nondominated(const std::vector<DecisionPoint>& points);

// true iff some member of set has fx dominating x's fx (equality does not count)
bool is_dominated(const FrontSet& set, const DecisionPoint& x);

// Adds z unless an equal-fx member exists or a member dominates z, then removes
// members z dominates.  Returns true when z was added; output is always a FrontSet.
bool insert_and_filter(FrontSet& set, DecisionPoint z);

// true iff no member dominates another (distinct fx is checked separately)
bool mutually_nondominated(const FrontSet& set);

// NSGA-II crowding-distance truncation to cap points; per-objective extremes are always
// kept.  Identity when |set| <= cap.  cap must be >= 2.
FrontSet crowding_prune(const FrontSet& set, std::size_t cap);

// Crowding distances in set order (infinity for per-objective extremes), exposed for tests.
std::vector<double> crowding_distances(const FrontSet& set);

}  // namespace fpd
