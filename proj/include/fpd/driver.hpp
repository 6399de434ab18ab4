#pragma once

#include <deque>
#include <map>
#include <optional>
#include <string>

#include "fpd/direction.hpp"
#include "fpd/hypervolume.hpp"
#include "fpd/line_search.hpp"
#include "fpd/pareto.hpp"
#include "fpd/problem.hpp"

namespace fpd {

enum class SolverKind { FPD, FPD_NMT };

std::string solver_name(SolverKind kind);
SolverKind solver_from_name(const std::string& name);

struct SigmaSchedule {
    enum class Kind { Constant, Geometric } kind = Kind::Constant;
    double sigma = 1e-4;   // constant mode
    double sigma0 = 1e-2;  // geometric mode start
    double rho = 0.9;      // geometric decay, in (0,1)

    double value(int k) const;
    static SigmaSchedule constant(double s);
    static SigmaSchedule geometric(double s0, double r);
};

struct StoppingRule {
    int max_iterations = 200;
    double wall_clock_seconds = 0.0;  // 0 disables the wall budget
    int stall_window = 3;             // 0 disables; constant-sigma mode only
};

struct DriverConfig {
    SolverKind solver = SolverKind::FPD_NMT;
    ArmijoParams armijo;
    SolverSettings direction;
    SigmaSchedule sigma;
    std::size_t memory_M = 4;
    std::size_t crowding_cap = 100;
    StoppingRule stop;
    int snapshot_every = 1;  // record objective-space snapshots every k iterations; 0 = final only
    bool certify = false;    // run the theory predicates each iteration and tally violations
};

// One executed iteration of the outer loop.  Set statistics refer to the start-of-
// iteration state (X^k, C^k, Theta(X^k)) measured against that iteration's frozen zeta;
// the work counters cover what the iteration then did.
struct IterationRecord {
    int k = 0;
    std::size_t size_x = 0;
    double hv_x = 0.0;
    std::optional<double> hv_c;  // FPD has no reference set
    double theta = 0.0;
    double sigma = 0.0;
    std::size_t processed = 0;  // points that survived the dominance guard
    double alpha_sum = 0.0;     // accepted refinement step sizes
    std::size_t alpha_count = 0;
    std::size_t phase1_trials = 0;
    std::size_t phase1_failures = 0;  // backtracking exhausted; point kept unrefined
    std::size_t exploration_trials = 0;
    std::size_t exploration_skips = 0;
    std::size_t direction_failures = 0;  // subproblem certificate unattainable; point treated as stationary
    std::uint64_t objective_evals = 0;  // cumulative over the run so far
    std::uint64_t jacobian_evals = 0;
    double wall_seconds = 0.0;
    std::optional<std::vector<Vector>> snapshot_x;  // F(X^k) when due
    std::optional<std::vector<Vector>> snapshot_c;  // F(C^k) when due (FPD_NMT)
};

struct CertificationReport {
    struct Tally {
        std::size_t checks = 0;
        std::size_t violations = 0;
    };
    std::map<std::string, Tally> predicates;
    std::vector<std::string> samples;  // first few violation descriptions

    void record(const std::string& predicate, bool ok, const std::string& detail);
    std::size_t total_violations() const;
};

struct RunTrace {
    std::string problem;
    std::size_t n = 0;
    std::size_t m = 0;
    SolverKind solver = SolverKind::FPD;
    std::string status;  // max_iterations | wall_clock | stationarity_stall
    std::vector<IterationRecord> records;
    FrontSet final_front;
    Vector final_zeta;
    double final_theta = 0.0;
    std::vector<Vector> final_fx;  // convenience copy of F(final_front)
    std::uint64_t total_objective_evals = 0;
    std::uint64_t total_jacobian_evals = 0;
    std::size_t total_processed = 0;
    double wall_seconds = 0.0;
    CertificationReport certification;
};

// Iteration drivers.  Driver owns the evolving state (X^k, memory window, reference
// state, zeta tracker) so single iterations are testable in isolation via step().
class Driver {
public:
    Driver(const Problem& problem, DriverConfig config);

    // Seed from explicit points instead of problem.initial_points() (tests mostly).
    void initialize(const std::vector<Vector>& starts);

    const FrontSet& front() const { return x_; }
    const FrontSet& reference_set() const { return refstate_current_; }
    const Vector& zeta() const { return tracker_.zeta; }
    const CertificationReport& certification() const { return report_; }
    int iteration() const { return k_; }

    // Executes iteration k.  Returns the record; statistics as documented above.
    IterationRecord step();

    // Full run with the stopping rule; includes initialization when not done yet.
    RunTrace run();

private:
    struct WindowEntry {
        int iter;
        FrontSet set;
    };

    void require_initialized();
    BigThetaResult tolerant_big_theta();
    double frozen_hv(const FrontSet& set, const Vector& zeta) const;
    DecisionPoint make_point(Vector x, Vector fx) const;
    std::size_t pick_argmin_hv(const std::vector<std::pair<int, const FrontSet*>>& candidates,
                               const std::vector<double>& hvs,
                               std::optional<int> preferred) const;
    FrontSet build_reference_set(const Vector& zeta, int& chosen_iter, double& hv_xl,
                                 double& hv_cprev);
    FrontSet finalize_nmt(FrontSet xhat, const Vector& zeta, int& chosen_iter);
    void certify_reference(const FrontSet& c, double hv_c, double hv_xl, double hv_cprev);
    void certify_front(const FrontSet& next, const FrontSet& prev);

    const Problem& problem_;
    DriverConfig config_;
    bool initialized_ = false;
    int k_ = 0;
    FrontSet x_;
    FrontSet refstate_current_;   // C^{k-1} entering an iteration, C^k after it
    FrontSet refstate_previous_;  // retained one extra step for certification
    std::deque<WindowEntry> window_;          // newest first: X^k, X^{k-1}, ...
    std::optional<int> argmin_token_;         // iteration index of X-bar^{l(k-1)}
    std::deque<std::pair<int, FrontSet>> recent_refs_;  // past C^k for delayed checks
    ReferenceTracker tracker_;
    mutable std::uint64_t next_id_ = 1;
    int stall_streak_ = 0;
    std::size_t pending_direction_failures_ = 0;  // tallied by the next step() record
    double wall_accum_ = 0.0;
    CertificationReport report_;
};

// Convenience single-iteration entry points mirroring the two algorithm variants.
FrontSet fpd_iteration(const Problem& problem, const FrontSet& x, const DriverConfig& config);
FrontSet fpd_nmt_iteration(const Problem& problem, const FrontSet& x, const DriverConfig& config);

RunTrace run(const Problem& problem, const DriverConfig& config);

}  // namespace fpd
