#include "fpd/pareto.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace fpd {

bool leq(const Vector& u, const Vector& v) {
    if (u.size() != v.size()) throw std::invalid_argument("compare: length mismatch");
    for (std::size_t i = 0; i < u.size(); ++i)
        if (!(u[i] <= v[i])) return false;
    return true;
}

bool strictly_less(const Vector& u, const Vector& v) {
    if (u.size() != v.size()) throw std::invalid_argument("compare: length mismatch");
    for (std::size_t i = 0; i < u.size(); ++i)
        if (!(u[i] < v[i])) return false;
    return true;
}

bool dominates(const Vector& u, const Vector& v) {
    if (u.size() != v.size()) throw std::invalid_argument("compare: length mismatch");
    bool strict = false;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] > v[i]) return false;
        if (u[i] < v[i]) strict = true;
    }
    return strict;
}

Comparison compare(const Vector& u, const Vector& v) {
    Comparison c;
    c.leq = leq(u, v);
    c.reverse_leq = leq(v, u);
    c.equal = c.leq && c.reverse_leq;
    c.strictly_less = strictly_less(u, v);
    c.dominates = c.leq && !c.equal;
    return c;
}

FrontSet filter_nondominated(const std::vector<DecisionPoint>& points) {
    FrontSet out;
    for (std::size_t i = 0; i < points.size(); ++i) {
        bool keep = true;
        for (std::size_t j = 0; j < points.size() && keep; ++j) {
            if (j == i) continue;
            if (dominates(points[j].fx, points[i].fx)) keep = false;
            // duplicate fx: only the earliest occurrence survives
            if (points[j].fx == points[i].fx && j < i) keep = false;
        }
        if (keep) out.push_back(points[i]);
    }
    return out;
}

bool is_dominated(const FrontSet& set, const DecisionPoint& x) {
    for (const auto& y : set)
        if (dominates(y.fx, x.fx)) return true;
    return false;
}

bool insert_and_filter(FrontSet& set, DecisionPoint z) {
    // Rejecting dominated candidates keeps the stable-set invariant for arbitrary
    // callers; the descent loop never produces one (its z improves on a surviving
    // point), so there this branch is dead.
    for (const auto& y : set)
        if (y.fx == z.fx || dominates(y.fx, z.fx)) return false;
    set.erase(std::remove_if(set.begin(), set.end(),
                             [&](const DecisionPoint& y) { return dominates(z.fx, y.fx); }),
              set.end());
    set.push_back(std::move(z));
    return true;
}

bool mutually_nondominated(const FrontSet& set) {
    for (std::size_t i = 0; i < set.size(); ++i)
        for (std::size_t j = 0; j < set.size(); ++j)
            if (i != j && dominates(set[i].fx, set[j].fx)) return false;
    return true;
}

std::vector<double> crowding_distances(const FrontSet& set) {
    const std::size_t n = set.size();
    std::vector<double> dist(n, 0.0);
    if (n == 0) return dist;
    const std::size_t m = set[0].fx.size();
    const double inf = std::numeric_limits<double>::infinity();
    for (std::size_t obj = 0; obj < m; ++obj) {
        std::vector<std::size_t> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            if (set[a].fx[obj] != set[b].fx[obj]) return set[a].fx[obj] < set[b].fx[obj];
            return set[a].id < set[b].id;
        });
        dist[order.front()] = inf;
        dist[order.back()] = inf;
        const double range = set[order.back()].fx[obj] - set[order.front()].fx[obj];
        if (range <= 0.0) continue;
        for (std::size_t r = 1; r + 1 < n; ++r) {
            const std::size_t i = order[r];
            if (dist[i] == inf) continue;
            dist[i] += (set[order[r + 1]].fx[obj] - set[order[r - 1]].fx[obj]) / range;
        }
    }
    return dist;
}

FrontSet crowding_prune(const FrontSet& set, std::size_t cap) {
    if (cap < 2) throw std::invalid_argument("crowding_prune: cap must be >= 2");
    if (set.size() <= cap) return set;
    const std::vector<double> dist = crowding_distances(set);
    std::vector<std::size_t> order(set.size());
    std::iota(order.begin(), order.end(), 0);
    // largest distance first; ties resolved by id so pruning is deterministic
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (dist[a] != dist[b]) return dist[a] > dist[b];
        return set[a].id < set[b].id;
    });
    std::vector<bool> keep(set.size(), false);
    for (std::size_t r = 0; r < cap; ++r) keep[order[r]] = true;
    FrontSet out;
    out.reserve(cap);
    for (std::size_t i = 0; i < set.size(); ++i)
        if (keep[i]) out.push_back(set[i]);
    return out;
}

}  // namespace fpd
