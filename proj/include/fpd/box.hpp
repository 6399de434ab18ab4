#pragma once

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "fpd/linalg.hpp"

namespace fpd {

// Feasible box [lower, upper]; entries may be +-infinity for unbounded coordinates.
struct BoxBounds {
    Vector lower;
    Vector upper;

    BoxBounds() = default;
    BoxBounds(Vector lo, Vector up) : lower(std::move(lo)), upper(std::move(up)) {
        if (lower.size() != upper.size())
            throw std::invalid_argument("box bounds: lower/upper size mismatch");
        for (std::size_t i = 0; i < lower.size(); ++i)
            if (!(lower[i] <= upper[i]))
                throw std::invalid_argument("box bounds: lower > upper");
    }

    static BoxBounds uniform(std::size_t n, double lo, double up) {
        return BoxBounds(Vector(n, lo), Vector(n, up));
    }

    static BoxBounds unbounded(std::size_t n) {
        const double inf = std::numeric_limits<double>::infinity();
        return BoxBounds(Vector(n, -inf), Vector(n, inf));
    }

    std::size_t dim() const { return lower.size(); }

    bool contains(const Vector& x) const {
        if (x.size() != lower.size()) return false;
        for (std::size_t i = 0; i < x.size(); ++i)
            if (x[i] < lower[i] || x[i] > upper[i]) return false;
        return true;
    }

    // Exact coordinate-wise clamp; the returned point always satisfies contains().
    Vector clamp(const Vector& x) const {
        Vector y(x.size());
        for (std::size_t i = 0; i < x.size(); ++i)
            y[i] = std::min(std::max(x[i], lower[i]), upper[i]);
        return y;
    }
};

}  // namespace fpd
