#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "fpd/box.hpp"
#include "fpd/linalg.hpp"

namespace fpd {

// Tallies objective and Jacobian evaluations for one problem instance.  Increments are
// relaxed atomics so instances may be shared read-only across threads; the benchmark
// harness gives each (solver, instance) cell its own instance anyway.
struct EvalCounter {
    std::atomic<std::uint64_t> objective_evals{0};
    std::atomic<std::uint64_t> jacobian_evals{0};

    void reset() {
        objective_evals.store(0, std::memory_order_relaxed);
        jacobian_evals.store(0, std::memory_order_relaxed);
    }
    std::uint64_t objectives() const { return objective_evals.load(std::memory_order_relaxed); }
    std::uint64_t jacobians() const { return jacobian_evals.load(std::memory_order_relaxed); }
};

// A box-constrained multiobjective problem with analytic Jacobian.
// Subclass and override eval_impl/jacobian_impl to add custom problems; evaluate() and
// jacobian() validate inputs, enforce finiteness and count calls.
class Problem {
public:
    Problem(std::string name, std::size_t n, std::size_t m, BoxBounds bounds)
        : name_(std::move(name)), n_(n), m_(m), bounds_(std::move(bounds)) {
        if (bounds_.dim() != n_) throw std::invalid_argument(name_ + ": bounds dimension mismatch");
        if (n_ == 0 || m_ == 0) throw std::invalid_argument(name_ + ": empty problem");
    }
    virtual ~Problem() = default;

    const std::string& name() const { return name_; }
    std::size_t dim() const { return n_; }
    std::size_t n_objectives() const { return m_; }
    const BoxBounds& bounds() const { return bounds_; }

    Vector evaluate(const Vector& x) const {
        check_input(x);
        Vector f(m_);
        eval_impl(x, f);
        if (!all_finite(f)) throw std::domain_error(name_ + ": non-finite objective value");
        counter_.objective_evals.fetch_add(1, std::memory_order_relaxed);
        return f;
    }

    Matrix jacobian(const Vector& x) const {
        check_input(x);
        Matrix j(m_, n_);
        jacobian_impl(x, j);
        for (double v : j.data)
            if (!std::isfinite(v)) throw std::domain_error(name_ + ": non-finite Jacobian entry");
        counter_.jacobian_evals.fetch_add(1, std::memory_order_relaxed);
        return j;
    }

    // Starting points as published for the benchmark; may fall outside the current
    // nondominated filter but must be feasible.
    virtual std::vector<Vector> initial_points() const = 0;

    EvalCounter& counter() const { return counter_; }

protected:
    virtual void eval_impl(const Vector& x, Vector& f) const = 0;
    virtual void jacobian_impl(const Vector& x, Matrix& j) const = 0;

private:
    void check_input(const Vector& x) const {
        if (x.size() != n_) throw std::invalid_argument(name_ + ": input dimension mismatch");
        if (!all_finite(x)) throw std::domain_error(name_ + ": non-finite input");
        if (!bounds_.contains(x)) throw std::domain_error(name_ + ": input outside bounds");
    }

    std::string name_;
    std::size_t n_;
    std::size_t m_;
    BoxBounds bounds_;
    mutable EvalCounter counter_;
};

// Convenience adapter: build a Problem from plain callables.  This is the documented
// in-process extension point for user-defined problems (also used heavily in tests).
class FunctionProblem : public Problem {
public:
    using EvalFn = std::function<void(const Vector&, Vector&)>;
    using JacFn = std::function<void(const Vector&, Matrix&)>;

    FunctionProblem(std::string name, std::size_t n, std::size_t m, BoxBounds bounds,
                    EvalFn eval, JacFn jac, std::vector<Vector> starts)
        : Problem(std::move(name), n, m, std::move(bounds)),
          eval_(std::move(eval)),
          jac_(std::move(jac)),
          starts_(std::move(starts)) {}

    std::vector<Vector> initial_points() const override { return starts_; }

protected:
    void eval_impl(const Vector& x, Vector& f) const override { eval_(x, f); }
    void jacobian_impl(const Vector& x, Matrix& j) const override { jac_(x, j); }

private:
    EvalFn eval_;
    JacFn jac_;
    std::vector<Vector> starts_;
};

// Name-indexed factory registry.  Benchmark problems self-register at startup; user code
// may add its own factories before invoking the CLI driver in-process.
class ProblemRegistry {
public:
    using Factory = std::function<std::unique_ptr<Problem>(std::size_t n)>;

    void add(const std::string& name, Factory f);
    bool contains(const std::string& name) const;
    std::unique_ptr<Problem> create(const std::string& name, std::size_t n) const;
    std::vector<std::string> names() const;  // sorted

private:
    std::vector<std::pair<std::string, Factory>> factories_;
};

// Global registry preloaded with the benchmark suite.
ProblemRegistry& registry();

}  // namespace fpd
