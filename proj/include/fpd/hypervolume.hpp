#pragma once

#include "fpd/pareto.hpp"

namespace fpd {

// Componentwise running max over every objective vector generated during a run; the
// resulting zeta is the reference point all hypervolume comparisons are made against.
// Monotone nondecreasing per component by construction.
struct ReferenceTracker {
    Vector zeta;  // empty until the first update

    void update(const Vector& fx) {
        if (zeta.empty()) {
            zeta = fx;
            return;
        }
        for (std::size_t i = 0; i < fx.size(); ++i)
            if (fx[i] > zeta[i]) zeta[i] = fx[i];
    }
    void update(const std::vector<Vector>& fxs) {
        for (const auto& f : fxs) update(f);
    }
};

// Lebesgue measure of the region dominated by the front and bounded by zeta:
// union over front points p of the boxes [p, zeta].  Points with any coordinate
// beyond zeta contribute nothing.  Exact for m in {1,2,3}; throws for larger m.
double hypervolume(const std::vector<Vector>& front_fx, const Vector& zeta);
double hypervolume(const FrontSet& front, const Vector& zeta);

// Guaranteed hypervolume gain when mu (strictly better in every objective) replaces a
// front member: the product of the per-objective gaps.  Preconditions checked.
double replacement_gain_bound(const FrontSet& front, const DecisionPoint& replaced,
                         const DecisionPoint& mu, const Vector& zeta);

}  // namespace fpd
