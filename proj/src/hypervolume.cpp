#include "fpd/hypervolume.hpp"

#include <algorithm>
#include <stdexcept>

namespace fpd {
namespace {

// Keep only points inside the reference box, then reduce to the nondominated subset
// (dominated or duplicate points never change the measure).
std::vector<Vector> clip_and_filter(const std::vector<Vector>& fxs, const Vector& zeta) {
    std::vector<Vector> pts;
    for (const auto& f : fxs) {
        if (f.size() != zeta.size()) throw std::invalid_argument("hypervolume: length mismatch");
        if (leq(f, zeta)) pts.push_back(f);
    }
    std::vector<Vector> out;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        bool keep = true;
        for (std::size_t j = 0; j < pts.size() && keep; ++j) {
            if (j == i) continue;
            if (dominates(pts[j], pts[i])) keep = false;
            if (pts[j] == pts[i] && j < i) keep = false;
        }
        if (keep) out.push_back(pts[i]);
    }
    return out;
}

double hv2(std::vector<Vector> pts, double z1, double z2) {
    // Sweep in ascending f1; a point whose f2 is not below the running minimum is
    // 2D-dominated and contributes nothing.  The 3D slicer feeds projections here,
    // so dominated entries are expected even when the 3D set is a stable set.
    std::sort(pts.begin(), pts.end());
    double vol = 0.0, top = z2;
    for (const auto& p : pts) {
        if (p[1] >= top) continue;
        vol += (z1 - p[0]) * (top - p[1]);
        top = p[1];
    }
    return vol;
}

double hv3(const std::vector<Vector>& pts, const Vector& zeta) {
    // dimension sweep over f3: slice into slabs between consecutive distinct f3 levels,
    // each slab contributing (2D area of points already active) x (slab thickness)
    std::vector<double> levels;
    for (const auto& p : pts) levels.push_back(p[2]);
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    double vol = 0.0;
    for (std::size_t t = 0; t < levels.size(); ++t) {
        const double lo = levels[t];
        const double hi = t + 1 < levels.size() ? levels[t + 1] : zeta[2];
        if (hi <= lo) continue;
        std::vector<Vector> active;
        for (const auto& p : pts)
            if (p[2] <= lo) active.push_back({p[0], p[1]});
        vol += hv2(std::move(active), zeta[0], zeta[1]) * (hi - lo);
    }
    return vol;
}

}  // namespace

double hypervolume(const std::vector<Vector>& front_fx, const Vector& zeta) {
    if (zeta.size() > 3) throw std::invalid_argument("hypervolume: m > 3 unsupported");
    if (zeta.empty()) throw std::invalid_argument("hypervolume: empty reference point");
    const std::vector<Vector> pts = clip_and_filter(front_fx, zeta);
    if (pts.empty()) return 0.0;
    if (zeta.size() == 1) {
        double best = pts[0][0];
        for (const auto& p : pts) best = std::min(best, p[0]);
        return zeta[0] - best;
    }
    if (zeta.size() == 2) return hv2(pts, zeta[0], zeta[1]);
    return hv3(pts, zeta);
}

double hypervolume(const FrontSet& front, const Vector& zeta) {
    std::vector<Vector> fxs;
    fxs.reserve(front.size());
    for (const auto& p : front) fxs.push_back(p.fx);
    return hypervolume(fxs, zeta);
}

double replacement_gain_bound(const FrontSet& front, const DecisionPoint& replaced,
                         const DecisionPoint& mu, const Vector& zeta) {
    if (!strictly_less(mu.fx, replaced.fx))
        throw std::invalid_argument("replacement_gain_bound: mu must strictly improve every objective");
    if (!mutually_nondominated(front))
        throw std::invalid_argument("replacement_gain_bound: front is not a stable set");
    if (!leq(replaced.fx, zeta))
        throw std::invalid_argument("replacement_gain_bound: replaced point beyond reference");
    double prod = 1.0;
    for (std::size_t j = 0; j < mu.fx.size(); ++j) prod *= replaced.fx[j] - mu.fx[j];
    return prod;
}

}  // namespace fpd
