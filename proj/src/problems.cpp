// Benchmark problem transcriptions with analytic Jacobians.
//
// CEC09 instances follow the CEC-2009 competition technical report (Zhang et al.),
// ZDT instances follow Zitzler/Deb/Thiele (2000), JOS_1 follows Jin et al. (2001) on
// the box [0,100]^n.  MAN is a local stand-in documented in the README (its original
// source was unavailable when this suite was transcribed).
//
// Derivative conventions at measure-zero kinks, documented in the README:
//  - power terms x1^p with p<1 clamp the base at 1e-12 in derivatives (UF1/2/3/7, ZDT);
//  - |s(x)| uses sign(0)=0 (UF5), max{0,s(x)} uses one-sided derivative 0 at s=0 (UF6/9),
//    and |t|/(1+e^{2|t|}) uses derivative 0 at t=0 (UF4).

#include "fpd/problems.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace fpd {
namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kPowerFloor = 1e-12;

double sign0(double t) { return t > 0 ? 1.0 : (t < 0 ? -1.0 : 0.0); }

// 1-based objective-group index sets for the CEC09 tail coordinates.
// Two objectives: J1 = odd j in [2,n], J2 = even j in [2,n].
// Three objectives: j in [3,n] with j-1, j-2, j divisible by 3 respectively.
struct JSplit2 {
    std::vector<std::size_t> j1, j2;
    explicit JSplit2(std::size_t n) {
        for (std::size_t j = 2; j <= n; ++j) (j % 2 == 1 ? j1 : j2).push_back(j);
    }
};

struct JSplit3 {
    std::vector<std::size_t> j1, j2, j3;
    explicit JSplit3(std::size_t n) {
        for (std::size_t j = 3; j <= n; ++j) {
            if ((j - 1) % 3 == 0)
                j1.push_back(j);
            else if ((j - 2) % 3 == 0)
                j2.push_back(j);
            else
                j3.push_back(j);
        }
    }
};

// 2/|J| * sum, with the empty-set convention that the whole term vanishes.
double tail_avg(double sum, std::size_t count) { return count ? 2.0 * sum / double(count) : 0.0; }

class DiagonalStartProblem : public Problem {
public:
    using Problem::Problem;

    // n points uniformly spaced along the box diagonal, endpoints included.
    std::vector<Vector> initial_points() const override {
        const std::size_t n = dim();
        const BoxBounds& b = bounds();
        std::vector<Vector> pts;
        pts.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            const double t = n > 1 ? double(i) / double(n - 1) : 0.0;
            Vector x(n);
            for (std::size_t c = 0; c < n; ++c) x[c] = b.lower[c] + t * (b.upper[c] - b.lower[c]);
            pts.push_back(std::move(x));
        }
        return pts;
    }
};

class SingleStartProblem : public Problem {
public:
    SingleStartProblem(std::string name, std::size_t n, std::size_t m, BoxBounds bounds,
                       double start_value)
        : Problem(std::move(name), n, m, std::move(bounds)), start_(n, start_value) {}

    std::vector<Vector> initial_points() const override { return {start_}; }

private:
    Vector start_;
};

BoxBounds cec09_bounds_2obj(std::size_t n, double tail_lo, double tail_hi) {
    Vector lo(n, tail_lo), hi(n, tail_hi);
    lo[0] = 0.0;
    hi[0] = 1.0;
    return BoxBounds(std::move(lo), std::move(hi));
}

BoxBounds cec09_bounds_3obj(std::size_t n) {
    Vector lo(n, -2.0), hi(n, 2.0);
    lo[0] = lo[1] = 0.0;
    hi[0] = hi[1] = 1.0;
    return BoxBounds(std::move(lo), std::move(hi));
}

// ---------------------------------------------------------------- UF1, UF4, UF5, UF7
// These four share the tail residual y_j = x_j - sin(6*pi*x1 + j*pi/n) and differ in
// the head terms and the per-residual penalty h.

struct SineTail {
    std::size_t n;
    double x1;
    double y(const Vector& x, std::size_t j) const {
        return x[j - 1] - std::sin(6.0 * kPi * x1 + double(j) * kPi / double(n));
    }
    double dy_dx1(std::size_t j) const {
        return -6.0 * kPi * std::cos(6.0 * kPi * x1 + double(j) * kPi / double(n));
    }
};

class UF1 : public DiagonalStartProblem {
public:
    explicit UF1(std::size_t n)
        : DiagonalStartProblem("CEC09_1", n, 2, cec09_bounds_2obj(n, -1.0, 1.0)), js_(n) {}

protected:
    void eval_impl(const Vector& x, Vector& f) const override {
        SineTail t{dim(), x[0]};
        double s1 = 0, s2 = 0;
        for (std::size_t j : js_.j1) s1 += t.y(x, j) * t.y(x, j);
        for (std::size_t j : js_.j2) s2 += t.y(x, j) * t.y(x, j);
        f[0] = x[0] + tail_avg(s1, js_.j1.size());
        f[1] = 1.0 - std::sqrt(x[0]) + tail_avg(s2, js_.j2.size());
    }
    void jacobian_impl(const Vector& x, Matrix& jac) const override {
        SineTail t{dim(), x[0]};
        jac.at(0, 0) = 1.0;
        jac.at(1, 0) = -0.5 / std::sqrt(std::max(x[0], kPowerFloor));
        for (std::size_t j : js_.j1) {
            const double c = 4.0 / double(js_.j1.size()) * t.y(x, j);
            jac.at(0, j - 1) = c;
            jac.at(0, 0) += c * t.dy_dx1(j);
        }
        for (std::size_t j : js_.j2) {
            const double c = 4.0 / double(js_.j2.size()) * t.y(x, j);
            jac.at(1, j - 1) = c;
            jac.at(1, 0) += c * t.dy_dx1(j);
        }
    }

private:
    JSplit2 js_;
};

class UF4 : public DiagonalStartProblem {
public:
    explicit UF4(std::size_t n)
        : DiagonalStartProblem("CEC09_4", n, 2, cec09_bounds_2obj(n, -2.0, 2.0)), js_(n) {}

protected:
    static double h(double t) {
        const double u = std::fabs(t);
        return u / (1.0 + std::exp(2.0 * u));
    }
    static double dh(double t) {
        if (t == 0.0) return 0.0;
        const double u = std::fabs(t);
        const double e = std::exp(2.0 * u);
        const double d = 1.0 + e;
        return sign0(t) * (d - 2.0 * u * e) / (d * d);
    }
    void eval_impl(const Vector& x, Vector& f) const override {
        SineTail t{dim(), x[0]};
        double s1 = 0, s2 = 0;
        for (std::size_t j : js_.j1) s1 += h(t.y(x, j));
        for (std::size_t j : js_.j2) s2 += h(t.y(x, j));
        f[0] = x[0] + tail_avg(s1, js_.j1.size());
        f[1] = 1.0 - x[0] * x[0] + tail_avg(s2, js_.j2.size());
    }
    void jacobian_impl(const Vector& x, Matrix& jac) const override {
        SineTail t{dim(), x[0]};
        jac.at(0, 0) = 1.0;
        jac.at(1, 0) = -2.0 * x[0];
        for (std::size_t j : js_.j1) {
            const double c = 2.0 / double(js_.j1.size()) * dh(t.y(x, j));
            jac.at(0, j - 1) = c;
            jac.at(0, 0) += c * t.dy_dx1(j);
        }
        for (std::size_t j : js_.j2) {
            const double c = 2.0 / double(js_.j2.size()) * dh(t.y(x, j));
            jac.at(1, j - 1) = c;
            jac.at(1, 0) += c * t.dy_dx1(j);
        }
    }

private:
    JSplit2 js_;
};

class UF5 : public DiagonalStartProblem {
public:
    explicit UF5(std::size_t n)
        : DiagonalStartProblem("CEC09_5", n, 2, cec09_bounds_2obj(n, -1.0, 1.0)), js_(n) {}

protected:
    static constexpr double kN = 10.0, kEps = 0.1;
    static double h(double t) { return 2.0 * t * t - std::cos(4.0 * kPi * t) + 1.0; }
    static double dh(double t) { return 4.0 * t + 4.0 * kPi * std::sin(4.0 * kPi * t); }
    void eval_impl(const Vector& x, Vector& f) const override {
        SineTail t{dim(), x[0]};
        double s1 = 0, s2 = 0;
        for (std::size_t j : js_.j1) s1 += h(t.y(x, j));
        for (std::size_t j : js_.j2) s2 += h(t.y(x, j));
        const double spike = (0.5 / kN + kEps) * std::fabs(std::sin(2.0 * kN * kPi * x[0]));
        f[0] = x[0] + spike + tail_avg(s1, js_.j1.size());
        f[1] = 1.0 - x[0] + spike + tail_avg(s2, js_.j2.size());
    }
    void jacobian_impl(const Vector& x, Matrix& jac) const override {
        SineTail t{dim(), x[0]};
        const double s = std::sin(2.0 * kN * kPi * x[0]);
        const double dspike = (0.5 / kN + kEps) * sign0(s) * 2.0 * kN * kPi *
                              std::cos(2.0 * kN * kPi * x[0]);
        jac.at(0, 0) = 1.0 + dspike;
        jac.at(1, 0) = -1.0 + dspike;
        for (std::size_t j : js_.j1) {
            const double c = 2.0 / double(js_.j1.size()) * dh(t.y(x, j));
            jac.at(0, j - 1) = c;
            jac.at(0, 0) += c * t.dy_dx1(j);
        }
        for (std::size_t j : js_.j2) {
            const double c = 2.0 / double(js_.j2.size()) * dh(t.y(x, j));
            jac.at(1, j - 1) = c;
            jac.at(1, 0) += c * t.dy_dx1(j);
        }
    }

private:
    JSplit2 js_;
};

class UF7 : public DiagonalStartProblem {
public:
    explicit UF7(std::size_t n)
        : DiagonalStartProblem("CEC09_7", n, 2, cec09_bounds_2obj(n, -1.0, 1.0)), js_(n) {}

protected:
    void eval_impl(const Vector& x, Vector& f) const override {
        SineTail t{dim(), x[0]};
        double s1 = 0, s2 = 0;
        for (std::size_t j : js_.j1) s1 += t.y(x, j) * t.y(x, j);
        for (std::size_t j : js_.j2) s2 += t.y(x, j) * t.y(x, j);
        const double r = std::pow(x[0], 0.2);
        f[0] = r + tail_avg(s1, js_.j1.size());
        f[1] = 1.0 - r + tail_avg(s2, js_.j2.size());
    }
    void jacobian_impl(const Vector& x, Matrix& jac) const override {
        SineTail t{dim(), x[0]};
        const double dr = 0.2 * std::pow(std::max(x[0], kPowerFloor), -0.8);
        jac.at(0, 0) = dr;
        jac.at(1, 0) = -dr;
        for (std::size_t j : js_.j1) {
            const double c = 4.0 / double(js_.j1.size()) * t.y(x, j);
            jac.at(0, j - 1) = c;
            jac.at(0, 0) += c * t.dy_dx1(j);
        }
        for (std::size_t j : js_.j2) {
            const double c = 4.0 / double(js_.j2.size()) * t.y(x, j);
            jac.at(1, j - 1) = c;
            jac.at(1, 0) += c * t.dy_dx1(j);
        }
    }

private:
    JSplit2 js_;
};

// ------------------------------------------------------------------------------- UF2

class UF2 : public DiagonalStartProblem {
public:
    explicit UF2(std::size_t n)
        : DiagonalStartProblem("CEC09_2", n, 2, cec09_bounds_2obj(n, -1.0, 1.0)), js_(n) {}

protected:
    // y_j = x_j - c_j(x1) * cos(B_j) for odd j, with sin(B_j) for even j, where
    // c_j = 0.3 x1^2 cos(A_j) + 0.6 x1, A_j = 24 pi x1 + 4 j pi / n, B_j = 6 pi x1 + j pi / n.
    struct Terms {
        double y, dy_dx1;
    };
    Terms term(const Vector& x, std::size_t j, bool odd) const {
        const double n = double(dim());
        const double a = 24.0 * kPi * x[0] + 4.0 * double(j) * kPi / n;
        const double b = 6.0 * kPi * x[0] + double(j) * kPi / n;
        const double c = 0.3 * x[0] * x[0] * std::cos(a) + 0.6 * x[0];
        const double dc = 0.6 * x[0] * std::cos(a) - 7.2 * kPi * x[0] * x[0] * std::sin(a) + 0.6;
        if (odd)
            return {x[j - 1] - c * std::cos(b), -(dc * std::cos(b) - 6.0 * kPi * c * std::sin(b))};
        return {x[j - 1] - c * std::sin(b), -(dc * std::sin(b) + 6.0 * kPi * c * std::cos(b))};
    }
    void eval_impl(const Vector& x, Vector& f) const override {
        double s1 = 0, s2 = 0;
        for (std::size_t j : js_.j1) s1 += term(x, j, true).y * term(x, j, true).y;
        for (std::size_t j : js_.j2) s2 += term(x, j, false).y * term(x, j, false).y;
        f[0] = x[0] + tail_avg(s1, js_.j1.size());
        f[1] = 1.0 - std::sqrt(x[0]) + tail_avg(s2, js_.j2.size());
    }
    void jacobian_impl(const Vector& x, Matrix& jac) const override {
        jac.at(0, 0) = 1.0;
        jac.at(1, 0) = -0.5 / std::sqrt(std::max(x[0], kPowerFloor));
        for (std::size_t j : js_.j1) {
            const Terms t = term(x, j, true);
            const double c = 4.0 / double(js_.j1.size()) * t.y;
            jac.at(0, j - 1) = c;
            jac.at(0, 0) += c * t.dy_dx1;
        }
        for (std::size_t j : js_.j2) {
            const Terms t = term(x, j, false);
            const double c = 4.0 / double(js_.j2.size()) * t.y;
            jac.at(1, j - 1) = c;
            jac.at(1, 0) += c * t.dy_dx1;
        }
    }

private:
    JSplit2 js_;
};

// ------------------------------------------------------------------------- UF3, UF6
// Both use the 4*sum(y^2) - 2*prod(cos(20 y_j pi / sqrt(j))) + 2 tail bracket.

struct CosProductTail {
    // Computes sum(y^2), the cosine product, and per-term data needed for gradients.
    struct Result {
        double sum_sq = 0.0;
        double product = 1.0;
        std::vector<double> y, loo;  // loo[i]: product of cos over all terms except i
        std::vector<double> dbracket_dy;
    };
    static Result eval(const std::vector<std::size_t>& js, const std::vector<double>& ys) {
        Result r;
        r.y = ys;
        const std::size_t k = ys.size();
        std::vector<double> c(k), pre(k + 1, 1.0), suf(k + 1, 1.0);
        for (std::size_t i = 0; i < k; ++i) {
            const double arg = 20.0 * ys[i] * kPi / std::sqrt(double(js[i]));
            c[i] = std::cos(arg);
            r.sum_sq += ys[i] * ys[i];
        }
        for (std::size_t i = 0; i < k; ++i) pre[i + 1] = pre[i] * c[i];
        for (std::size_t i = k; i-- > 0;) suf[i] = suf[i + 1] * c[i];
        r.product = pre[k];
        r.loo.resize(k);
        r.dbracket_dy.resize(k);
        for (std::size_t i = 0; i < k; ++i) {
            r.loo[i] = pre[i] * suf[i + 1];
            const double w = 20.0 * kPi / std::sqrt(double(js[i]));
            const double arg = w * ys[i];
            // d/dy_i [4 sum y^2 - 2 prod cos + 2] = 8 y_i + 2 w sin(arg) * loo_i
            r.dbracket_dy[i] = 8.0 * ys[i] + 2.0 * w * std::sin(arg) * r.loo[i];
        }
        return r;
    }
    static double bracket(const Result& r) { return 4.0 * r.sum_sq - 2.0 * r.product + 2.0; }
};

class UF3 : public DiagonalStartProblem {
public:
    explicit UF3(std::size_t n)
        : DiagonalStartProblem("CEC09_3", n, 2, BoxBounds::uniform(n, 0.0, 1.0)), js_(n) {}

protected:
    double exponent(std::size_t j) const {
        const std::size_t n = dim();
        if (n == 2) return 0.5;
        return 0.5 * (1.0 + 3.0 * double(j - 2) / double(n - 2));
    }
    void tail(const Vector& x, const std::vector<std::size_t>& js, std::vector<double>& ys,
              std::vector<double>& dy1) const {
        ys.clear();
        dy1.clear();
        for (std::size_t j : js) {
            const double e = exponent(j);
            ys.push_back(x[j - 1] - std::pow(x[0], e));
            dy1.push_back(-e * std::pow(std::max(x[0], kPowerFloor), e - 1.0));
        }
    }
    void eval_impl(const Vector& x, Vector& f) const override {
        std::vector<double> ys, dy1;
        tail(x, js_.j1, ys, dy1);
        auto r1 = CosProductTail::eval(js_.j1, ys);
        tail(x, js_.j2, ys, dy1);
        auto r2 = CosProductTail::eval(js_.j2, ys);
        f[0] = x[0] +
               (js_.j1.empty() ? 0.0 : 2.0 / double(js_.j1.size()) * CosProductTail::bracket(r1));
        f[1] = 1.0 - std::sqrt(x[0]) +
               (js_.j2.empty() ? 0.0 : 2.0 / double(js_.j2.size()) * CosProductTail::bracket(r2));
    }
    void jacobian_impl(const Vector& x, Matrix& jac) const override {
        jac.at(0, 0) = 1.0;
        jac.at(1, 0) = -0.5 / std::sqrt(std::max(x[0], kPowerFloor));
        std::vector<double> ys, dy1;
        tail(x, js_.j1, ys, dy1);
        auto r1 = CosProductTail::eval(js_.j1, ys);
        for (std::size_t i = 0; i < js_.j1.size(); ++i) {
            const double c = 2.0 / double(js_.j1.size()) * r1.dbracket_dy[i];
            jac.at(0, js_.j1[i] - 1) = c;
            jac.at(0, 0) += c * dy1[i];
        }
        tail(x, js_.j2, ys, dy1);
        auto r2 = CosProductTail::eval(js_.j2, ys);
        for (std::size_t i = 0; i < js_.j2.size(); ++i) {
            const double c = 2.0 / double(js_.j2.size()) * r2.dbracket_dy[i];
            jac.at(1, js_.j2[i] - 1) = c;
            jac.at(1, 0) += c * dy1[i];
        }
    }

private:
    JSplit2 js_;
};

class UF6 : public DiagonalStartProblem {
public:
    explicit UF6(std::size_t n)
        : DiagonalStartProblem("CEC09_6", n, 2, cec09_bounds_2obj(n, -1.0, 1.0)), js_(n) {}

protected:
    static constexpr double kN = 2.0, kEps = 0.1;
    void tail(const Vector& x, const std::vector<std::size_t>& js, std::vector<double>& ys,
              std::vector<double>& dy1) const {
        SineTail t{dim(), x[0]};
        ys.clear();
        dy1.clear();
        for (std::size_t j : js) {
            ys.push_back(t.y(x, j));
            dy1.push_back(t.dy_dx1(j));
        }
    }
    void eval_impl(const Vector& x, Vector& f) const override {
        std::vector<double> ys, dy1;
        tail(x, js_.j1, ys, dy1);
        auto r1 = CosProductTail::eval(js_.j1, ys);
        tail(x, js_.j2, ys, dy1);
        auto r2 = CosProductTail::eval(js_.j2, ys);
        const double hinge =
            std::max(0.0, 2.0 * (0.5 / kN + kEps) * std::sin(2.0 * kN * kPi * x[0]));
        f[0] = x[0] + hinge +
               (js_.j1.empty() ? 0.0 : 2.0 / double(js_.j1.size()) * CosProductTail::bracket(r1));
        f[1] = 1.0 - x[0] + hinge +
               (js_.j2.empty() ? 0.0 : 2.0 / double(js_.j2.size()) * CosProductTail::bracket(r2));
    }
    void jacobian_impl(const Vector& x, Matrix& jac) const override {
        const double s = std::sin(2.0 * kN * kPi * x[0]);
        const double dhinge =
            s > 0.0 ? 2.0 * (0.5 / kN + kEps) * 2.0 * kN * kPi * std::cos(2.0 * kN * kPi * x[0])
                    : 0.0;
        jac.at(0, 0) = 1.0 + dhinge;
        jac.at(1, 0) = -1.0 + dhinge;
        std::vector<double> ys, dy1;
        tail(x, js_.j1, ys, dy1);
        auto r1 = CosProductTail::eval(js_.j1, ys);
        for (std::size_t i = 0; i < js_.j1.size(); ++i) {
            const double c = 2.0 / double(js_.j1.size()) * r1.dbracket_dy[i];
            jac.at(0, js_.j1[i] - 1) = c;
            jac.at(0, 0) += c * dy1[i];
        }
        tail(x, js_.j2, ys, dy1);
        auto r2 = CosProductTail::eval(js_.j2, ys);
        for (std::size_t i = 0; i < js_.j2.size(); ++i) {
            const double c = 2.0 / double(js_.j2.size()) * r2.dbracket_dy[i];
            jac.at(1, js_.j2[i] - 1) = c;
            jac.at(1, 0) += c * dy1[i];
        }
    }

private:
    JSplit2 js_;
};

// ------------------------------------------------------------------- UF8, UF9, UF10
// Tri-objective family with tail y_j = x_j - 2 x2 sin(2 pi x1 + j pi / n).

struct TriTail {
    std::size_t n;
    double x1, x2;
    double s(std::size_t j) const { return std::sin(2.0 * kPi * x1 + double(j) * kPi / double(n)); }
    double c(std::size_t j) const { return std::cos(2.0 * kPi * x1 + double(j) * kPi / double(n)); }
    double y(const Vector& x, std::size_t j) const { return x[j - 1] - 2.0 * x2 * s(j); }
    double dy_dx1(std::size_t j) const { return -4.0 * kPi * x2 * c(j); }
    double dy_dx2(std::size_t j) const { return -2.0 * s(j); }
};

class TriObjectiveBase : public DiagonalStartProblem {
public:
    TriObjectiveBase(std::string name, std::size_t n)
        : DiagonalStartProblem(std::move(name), n, 3, cec09_bounds_3obj(n)), js_(n) {}

protected:
    // penalty applied to each tail residual; identity-square for UF8/UF9
    virtual double h(double t) const { return t * t; }
    virtual double dh(double t) const { return 2.0 * t; }

    // head terms and their x1/x2 partials, provided by each instance
    virtual void heads(const Vector& x, double f[3], double d1[3], double d2[3]) const = 0;

    void eval_impl(const Vector& x, Vector& f) const override {
        TriTail t{dim(), x[0], x[1]};
        double head[3], d1[3], d2[3];
        heads(x, head, d1, d2);
        const std::vector<std::size_t>* sets[3] = {&js_.j1, &js_.j2, &js_.j3};
        for (int o = 0; o < 3; ++o) {
            double s = 0;
            for (std::size_t j : *sets[o]) s += h(t.y(x, j));
            f[o] = head[o] + tail_avg(s, sets[o]->size());
        }
    }
    void jacobian_impl(const Vector& x, Matrix& jac) const override {
        TriTail t{dim(), x[0], x[1]};
        double head[3], d1[3], d2[3];
        heads(x, head, d1, d2);
        const std::vector<std::size_t>* sets[3] = {&js_.j1, &js_.j2, &js_.j3};
        for (int o = 0; o < 3; ++o) {
            jac.at(o, 0) = d1[o];
            jac.at(o, 1) = d2[o];
            for (std::size_t j : *sets[o]) {
                const double c = 2.0 / double(sets[o]->size()) * dh(t.y(x, j));
                jac.at(o, j - 1) = c;
                jac.at(o, 0) += c * t.dy_dx1(j);
                jac.at(o, 1) += c * t.dy_dx2(j);
            }
        }
    }

private:
    JSplit3 js_;
};

class UF8 : public TriObjectiveBase {
public:
    explicit UF8(std::size_t n) : TriObjectiveBase("CEC09_8", n) {}

protected:
    void heads(const Vector& x, double f[3], double d1[3], double d2[3]) const override {
        const double a1 = 0.5 * kPi * x[0], a2 = 0.5 * kPi * x[1];
        f[0] = std::cos(a1) * std::cos(a2);
        f[1] = std::cos(a1) * std::sin(a2);
        f[2] = std::sin(a1);
        d1[0] = -0.5 * kPi * std::sin(a1) * std::cos(a2);
        d1[1] = -0.5 * kPi * std::sin(a1) * std::sin(a2);
        d1[2] = 0.5 * kPi * std::cos(a1);
        d2[0] = -0.5 * kPi * std::cos(a1) * std::sin(a2);
        d2[1] = 0.5 * kPi * std::cos(a1) * std::cos(a2);
        d2[2] = 0.0;
    }
};

class UF9 : public TriObjectiveBase {
public:
    explicit UF9(std::size_t n) : TriObjectiveBase("CEC09_9", n) {}

protected:
    static constexpr double kEps = 0.1;
    void heads(const Vector& x, double f[3], double d1[3], double d2[3]) const override {
        const double w = 2.0 * x[0] - 1.0;
        const double inner = (1.0 + kEps) * (1.0 - 4.0 * w * w);
        const double q = std::max(0.0, inner);
        const double dq = inner > 0.0 ? -16.0 * (1.0 + kEps) * w : 0.0;
        f[0] = 0.5 * (q + 2.0 * x[0]) * x[1];
        f[1] = 0.5 * (q - 2.0 * x[0] + 2.0) * x[1];
        f[2] = 1.0 - x[1];
        d1[0] = 0.5 * (dq + 2.0) * x[1];
        d1[1] = 0.5 * (dq - 2.0) * x[1];
        d1[2] = 0.0;
        d2[0] = 0.5 * (q + 2.0 * x[0]);
        d2[1] = 0.5 * (q - 2.0 * x[0] + 2.0);
        d2[2] = -1.0;
    }
};

class UF10 : public TriObjectiveBase {
public:
    explicit UF10(std::size_t n) : TriObjectiveBase("CEC09_10", n) {}

protected:
    double h(double t) const override { return 4.0 * t * t - std::cos(8.0 * kPi * t) + 1.0; }
    double dh(double t) const override { return 8.0 * t + 8.0 * kPi * std::sin(8.0 * kPi * t); }
    void heads(const Vector& x, double f[3], double d1[3], double d2[3]) const override {
        const double a1 = 0.5 * kPi * x[0], a2 = 0.5 * kPi * x[1];
        f[0] = std::cos(a1) * std::cos(a2);
        f[1] = std::cos(a1) * std::sin(a2);
        f[2] = std::sin(a1);
        d1[0] = -0.5 * kPi * std::sin(a1) * std::cos(a2);
        d1[1] = -0.5 * kPi * std::sin(a1) * std::sin(a2);
        d1[2] = 0.5 * kPi * std::cos(a1);
        d2[0] = -0.5 * kPi * std::cos(a1) * std::sin(a2);
        d2[1] = 0.5 * kPi * std::cos(a1) * std::cos(a2);
        d2[2] = 0.0;
    }
};

// ------------------------------------------------------------------------ ZDT, JOS, MAN

class Zdt1 : public SingleStartProblem {
public:
    explicit Zdt1(std::size_t n)
        : SingleStartProblem("ZDT_1", n, 2, BoxBounds::uniform(n, 0.0, 1.0), 0.5) {}

protected:
    double g(const Vector& x) const {
        double s = 0;
        for (std::size_t i = 1; i < dim(); ++i) s += x[i];
        return 1.0 + 9.0 * s / double(dim() - 1);
    }
    void eval_impl(const Vector& x, Vector& f) const override {
        const double gv = g(x);
        f[0] = x[0];
        f[1] = gv - std::sqrt(x[0] * gv);
    }
    void jacobian_impl(const Vector& x, Matrix& jac) const override {
        const double gv = g(x);
        const double x1 = std::max(x[0], kPowerFloor);
        jac.at(0, 0) = 1.0;
        jac.at(1, 0) = -0.5 * std::sqrt(gv / x1);
        const double dgi = 9.0 / double(dim() - 1);
        const double df2_dg = 1.0 - 0.5 * std::sqrt(x[0] / gv);
        for (std::size_t i = 1; i < dim(); ++i) jac.at(1, i) = dgi * df2_dg;
    }
};

class Zdt3 : public SingleStartProblem {
public:
    explicit Zdt3(std::size_t n)
        : SingleStartProblem("ZDT_3", n, 2, BoxBounds::uniform(n, 0.0, 1.0), 0.5) {}

protected:
    double g(const Vector& x) const {
        double s = 0;
        for (std::size_t i = 1; i < dim(); ++i) s += x[i];
        return 1.0 + 9.0 * s / double(dim() - 1);
    }
    void eval_impl(const Vector& x, Vector& f) const override {
        const double gv = g(x);
        f[0] = x[0];
        f[1] = gv - std::sqrt(x[0] * gv) - x[0] * std::sin(10.0 * kPi * x[0]);
    }
    void jacobian_impl(const Vector& x, Matrix& jac) const override {
        const double gv = g(x);
        const double x1 = std::max(x[0], kPowerFloor);
        jac.at(0, 0) = 1.0;
        jac.at(1, 0) = -0.5 * std::sqrt(gv / x1) - std::sin(10.0 * kPi * x[0]) -
                       10.0 * kPi * x[0] * std::cos(10.0 * kPi * x[0]);
        const double dgi = 9.0 / double(dim() - 1);
        const double df2_dg = 1.0 - 0.5 * std::sqrt(x[0] / gv);
        for (std::size_t i = 1; i < dim(); ++i) jac.at(1, i) = dgi * df2_dg;
    }
};

class Jos1 : public SingleStartProblem {
public:
    explicit Jos1(std::size_t n)
        : SingleStartProblem("JOS_1", n, 2, BoxBounds::uniform(n, 0.0, 100.0), 50.0) {}

protected:
    void eval_impl(const Vector& x, Vector& f) const override {
        double s1 = 0, s2 = 0;
        for (double v : x) {
            s1 += v * v;
            s2 += (v - 2.0) * (v - 2.0);
        }
        f[0] = s1 / double(dim());
        f[1] = s2 / double(dim());
    }
    void jacobian_impl(const Vector& x, Matrix& jac) const override {
        for (std::size_t i = 0; i < dim(); ++i) {
            jac.at(0, i) = 2.0 * x[i] / double(dim());
            jac.at(1, i) = 2.0 * (x[i] - 2.0) / double(dim());
        }
    }
};

class Man : public SingleStartProblem {
public:
    explicit Man(std::size_t n)
        : SingleStartProblem("MAN", n, 2, BoxBounds::uniform(n, -10.0, 10.0), -10.0) {}

protected:
    void eval_impl(const Vector& x, Vector& f) const override {
        double s1 = 0, s2 = 0;
        for (double v : x) {
            const double a = v - 1.0, b = v + 1.0;
            s1 += a * a * a * a;
            s2 += b * b;
        }
        f[0] = s1 / double(dim());
        f[1] = s2 / double(dim());
    }
    void jacobian_impl(const Vector& x, Matrix& jac) const override {
        for (std::size_t i = 0; i < dim(); ++i) {
            const double a = x[i] - 1.0;
            jac.at(0, i) = 4.0 * a * a * a / double(dim());
            jac.at(1, i) = 2.0 * (x[i] + 1.0) / double(dim());
        }
    }
};

template <class P>
ProblemRegistry::Factory factory(std::size_t min_n) {
    return [min_n](std::size_t n) -> std::unique_ptr<Problem> {
        if (n < min_n) throw std::invalid_argument("problem requires n >= " + std::to_string(min_n));
        return std::make_unique<P>(n);
    };
}

}  // namespace

void register_benchmark_problems(ProblemRegistry& reg) {
    reg.add("CEC09_1", factory<UF1>(2));
    reg.add("CEC09_2", factory<UF2>(2));
    reg.add("CEC09_3", factory<UF3>(2));
    reg.add("CEC09_4", factory<UF4>(2));
    reg.add("CEC09_5", factory<UF5>(2));
    reg.add("CEC09_6", factory<UF6>(2));
    reg.add("CEC09_7", factory<UF7>(2));
    reg.add("CEC09_8", factory<UF8>(3));
    reg.add("CEC09_9", factory<UF9>(3));
    reg.add("CEC09_10", factory<UF10>(3));
    reg.add("ZDT_1", factory<Zdt1>(2));
    reg.add("ZDT_3", factory<Zdt3>(2));
    reg.add("JOS_1", factory<Jos1>(1));
    reg.add("MAN", factory<Man>(1));
}

std::unique_ptr<Problem> make_benchmark_problem(const std::string& name, std::size_t n) {
    return registry().create(name, n);
}

}  // namespace fpd
