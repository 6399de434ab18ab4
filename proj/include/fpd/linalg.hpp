#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace fpd {

using Vector = std::vector<double>;

// Dense row-major matrix, just big enough for m x n Jacobians.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

    double& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    double at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

    // row i as a pointer range [row(i), row(i)+cols)
    const double* row(std::size_t i) const { return data.data() + i * cols; }
    double* row(std::size_t i) { return data.data() + i * cols; }
};

inline double dot(const Vector& a, const Vector& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double dot(const double* a, const Vector& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < b.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm2_sq(const Vector& v) { return dot(v, v); }

inline double norm2(const Vector& v) { return std::sqrt(norm2_sq(v)); }

inline double frobenius_norm(const Matrix& m) {
    double s = 0.0;
    for (double x : m.data) s += x * x;
    return std::sqrt(s);
}

// y = A * x  (A is rows x cols, x has cols entries)
inline Vector matvec(const Matrix& a, const Vector& x) {
    Vector y(a.rows, 0.0);
    for (std::size_t i = 0; i < a.rows; ++i) y[i] = dot(a.row(i), x);
    return y;
}

// y = A^T * x  (x has rows entries, y has cols entries)
inline Vector matvec_transposed(const Matrix& a, const Vector& x) {
    Vector y(a.cols, 0.0);
    for (std::size_t i = 0; i < a.rows; ++i) {
        const double* r = a.row(i);
        for (std::size_t j = 0; j < a.cols; ++j) y[j] += r[j] * x[i];
    }
    return y;
}

inline bool all_finite(const Vector& v) {
    for (double x : v)
        if (!std::isfinite(x)) return false;
    return true;
}

}  // namespace fpd
