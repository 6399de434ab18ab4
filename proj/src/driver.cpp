#include "fpd/driver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace fpd {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

bool contains_fx(const FrontSet& set, const Vector& fx) {
    for (const auto& p : set)
        if (p.fx == fx) return true;
    return false;
}

// every x weakly dominates some y (F(x) <= F(y))
bool covers(const Vector& fx, const FrontSet& set) {
    for (const auto& p : set)
        if (leq(p.fx, fx)) return true;
    return false;
}

std::vector<Vector> fx_of(const FrontSet& set) {
    std::vector<Vector> out;
    out.reserve(set.size());
    for (const auto& p : set) out.push_back(p.fx);
    return out;
}

}  // namespace

std::string solver_name(SolverKind kind) {
    return kind == SolverKind::FPD ? "FPD" : "FPD_NMT";
}

SolverKind solver_from_name(const std::string& name) {
    if (name == "FPD") return SolverKind::FPD;
    if (name == "FPD_NMT") return SolverKind::FPD_NMT;
    throw std::invalid_argument("unknown solver: " + name);
}

double SigmaSchedule::value(int k) const {
    if (kind == Kind::Constant) return sigma;
    return sigma0 * std::pow(rho, double(k));
}

SigmaSchedule SigmaSchedule::constant(double s) {
    SigmaSchedule out;
    out.kind = Kind::Constant;
    out.sigma = s;
    return out;
}

SigmaSchedule SigmaSchedule::geometric(double s0, double r) {
    if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument("sigma schedule: rho must be in (0,1)");
    SigmaSchedule out;
    out.kind = Kind::Geometric;
    out.sigma0 = s0;
    out.rho = r;
    return out;
}

void CertificationReport::record(const std::string& predicate, bool ok,
                                 const std::string& detail) {
    Tally& t = predicates[predicate];
    ++t.checks;
    if (!ok) {
        ++t.violations;
        if (samples.size() < 20) samples.push_back(predicate + ": " + detail);
    }
}

std::size_t CertificationReport::total_violations() const {
    std::size_t n = 0;
    for (const auto& [_, t] : predicates) n += t.violations;
    return n;
}

Driver::Driver(const Problem& problem, DriverConfig config)
    : problem_(problem), config_(std::move(config)) {
    if (config_.memory_M == 0) throw std::invalid_argument("driver: memory_M must be positive");
    if (config_.crowding_cap < 2) throw std::invalid_argument("driver: crowding_cap must be >= 2");
}

DecisionPoint Driver::make_point(Vector x, Vector fx) const {
    DecisionPoint p;
    p.x = std::move(x);
    p.fx = std::move(fx);
    p.id = next_id_++;
    return p;
}

void Driver::initialize(const std::vector<Vector>& starts) {
    if (starts.empty()) throw std::invalid_argument("driver: no initial points");
    std::vector<DecisionPoint> pts;
    for (const auto& s : starts) {
        Vector x = problem_.bounds().clamp(s);
        Vector fx = problem_.evaluate(x);
        pts.push_back(make_point(std::move(x), std::move(fx)));
    }
    x_ = filter_nondominated(pts);
    for (const auto& p : x_) tracker_.update(p.fx);
    window_.clear();
    window_.push_front({0, x_});
    refstate_current_.clear();  // C^{-1} is empty
    refstate_previous_.clear();
    argmin_token_.reset();
    recent_refs_.clear();
    k_ = 0;
    stall_streak_ = 0;
    initialized_ = true;
}

void Driver::require_initialized() {
    if (!initialized_) initialize(problem_.initial_points());
}

double Driver::frozen_hv(const FrontSet& set, const Vector& zeta) const {
    return hypervolume(set, zeta);
}

std::size_t Driver::pick_argmin_hv(const std::vector<std::pair<int, const FrontSet*>>& candidates,
                                   const std::vector<double>& hvs,
                                   std::optional<int> preferred) const {
    double min_hv = hvs[0];
    for (double h : hvs) min_hv = std::min(min_hv, h);
    if (preferred) {
        for (std::size_t i = 0; i < candidates.size(); ++i)
            if (candidates[i].first == *preferred && hvs[i] == min_hv) return i;
    }
    std::size_t best = 0;
    int best_iter = std::numeric_limits<int>::max();
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (hvs[i] == min_hv && candidates[i].first < best_iter) {
            best = i;
            best_iter = candidates[i].first;
        }
    }
    return best;
}

FrontSet Driver::build_reference_set(const Vector& zeta, int& chosen_iter, double& hv_xl,
                                     double& hv_cprev) {
    std::vector<std::pair<int, const FrontSet*>> cands;
    for (const auto& e : window_) cands.emplace_back(e.iter, &e.set);
    std::vector<double> hvs;
    hvs.reserve(cands.size());
    for (const auto& [_, set] : cands) hvs.push_back(frozen_hv(*set, zeta));
    const std::size_t pick = pick_argmin_hv(cands, hvs, argmin_token_);
    chosen_iter = cands[pick].first;
    hv_xl = hvs[pick];
    hv_cprev = refstate_current_.empty() ? 0.0 : frozen_hv(refstate_current_, zeta);

    if (config_.certify && argmin_token_) {
        double min_hv = *std::min_element(hvs.begin(), hvs.end());
        bool preferred_tied = false;
        for (std::size_t i = 0; i < cands.size(); ++i)
            if (cands[i].first == *argmin_token_ && hvs[i] == min_hv) preferred_tied = true;
        report_.record("window_tie_prefers_previous",
                       !preferred_tied || chosen_iter == *argmin_token_,
                       "iteration " + std::to_string(k_));
    }

    // C-bar: nondominated subset of X^{l(k)} union C^{k-1} (union by point identity)
    std::vector<DecisionPoint> uni = *cands[pick].second;
    for (const auto& p : refstate_current_) {
        bool present = false;
        for (const auto& q : uni)
            if (q.id == p.id) present = true;
        if (!present) uni.push_back(p);
    }
    FrontSet cbar = filter_nondominated(uni);

    // C^k: add every current point that is strictly worse than all of C-bar in some
    // coordinate pattern (forall y exists j: f_j(y) < f_j(x))
    FrontSet c = cbar;
    for (const auto& x : x_) {
        bool add = true;
        for (const auto& y : cbar) {
            bool some_strict = false;
            for (std::size_t j = 0; j < x.fx.size() && !some_strict; ++j)
                if (y.fx[j] < x.fx[j]) some_strict = true;
            if (!some_strict) {
                add = false;
                break;
            }
        }
        if (add) c.push_back(x);
    }
    return c;
}

FrontSet Driver::finalize_nmt(FrontSet xhat, const Vector& zeta, int& chosen_iter) {
    std::vector<std::pair<int, const FrontSet*>> cands;
    cands.emplace_back(k_ + 1, &xhat);
    const int oldest = k_ - (int(config_.memory_M) - 1);
    for (const auto& e : window_)
        if (e.iter >= oldest) cands.emplace_back(e.iter, &e.set);
    std::vector<double> hvs;
    hvs.reserve(cands.size());
    for (const auto& [_, set] : cands) hvs.push_back(frozen_hv(*set, zeta));
    const std::size_t pick = pick_argmin_hv(cands, hvs, argmin_token_);
    chosen_iter = cands[pick].first;

    std::vector<DecisionPoint> uni = xhat;
    for (const auto& p : *cands[pick].second) {
        bool present = false;
        for (const auto& q : uni)
            if (q.id == p.id) present = true;
        if (!present) uni.push_back(p);
    }
    return filter_nondominated(uni);
}

void Driver::certify_reference(const FrontSet& c, double hv_c, double hv_xl, double hv_cprev) {
    const std::string at = "iteration " + std::to_string(k_);
    bool distinct = true;
    for (std::size_t i = 0; i < c.size() && distinct; ++i)
        for (std::size_t j = i + 1; j < c.size(); ++j)
            if (c[i].fx == c[j].fx) distinct = false;
    report_.record("reference_stable_set", mutually_nondominated(c) && distinct, at);

    bool b_ok = true;
    for (const auto& y : c)
        if (!covers(y.fx, x_)) b_ok = false;
    report_.record("reference_covered_by_front", b_ok, at);

    bool c_ok = true;
    for (const auto& x : x_) {
        bool has_worse = false;
        for (const auto& y : c)
            if (leq(x.fx, y.fx)) {
                has_worse = true;
                break;
            }
        if (!has_worse) c_ok = false;
    }
    report_.record("front_has_worse_reference", c_ok, at);

    const double slack = 1e-9 * std::max(1.0, std::max(hv_xl, hv_cprev));
    std::ostringstream detail;
    detail << at << " hv_c=" << hv_c << " hv_xl=" << hv_xl << " hv_cprev=" << hv_cprev;
    report_.record("reference_hv_nondecreasing", hv_c >= std::max(hv_xl, hv_cprev) - slack, detail.str());
}

void Driver::certify_front(const FrontSet& next, const FrontSet& prev) {
    const std::string at = "iteration " + std::to_string(k_);
    bool distinct = true;
    for (std::size_t i = 0; i < next.size() && distinct; ++i)
        for (std::size_t j = i + 1; j < next.size(); ++j)
            if (next[i].fx == next[j].fx) distinct = false;
    report_.record("front_stable_set", mutually_nondominated(next) && distinct, at);

    bool feasible = true;
    for (const auto& p : next)
        if (!problem_.bounds().contains(p.x)) feasible = false;
    report_.record("front_feasible", feasible, at);

    if (config_.solver == SolverKind::FPD) {
        bool ok = true;
        for (const auto& x : next)
            for (const auto& y : prev)
                if (dominates(y.fx, x.fx)) ok = false;
        report_.record("fpd_monotone_front", ok, at);
    }
}

// theta for every point, filling jacobian/direction caches (phase 1 reuses them).
// Benchmark functions with unbounded derivatives near the box boundary can make the
// subproblem certificate unattainable in double precision; such a point is treated
// as stationary and counted, instead of killing the run.
BigThetaResult Driver::tolerant_big_theta() {
    BigThetaResult res;
    res.value = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < x_.size(); ++i) {
        DecisionPoint& p = x_[i];
        if (!p.jac_cache) p.jac_cache = std::make_shared<Matrix>(problem_.jacobian(p.x));
        if (!p.dir_cache) {
            try {
                p.dir_cache = std::make_shared<DirectionOutcome>(
                    common_direction(p.x, *p.jac_cache, problem_.bounds(), config_.direction));
            } catch (const std::runtime_error&) {
                ++pending_direction_failures_;
                DirectionOutcome stationary;
                stationary.v = Vector(p.x.size(), 0.0);
                p.dir_cache = std::make_shared<DirectionOutcome>(std::move(stationary));
            }
        }
        if (p.dir_cache->theta < res.value) {
            res.value = p.dir_cache->theta;
            res.argmin = i;
        }
    }
    return res;
}

IterationRecord Driver::step() {
    require_initialized();
    const auto t0 = Clock::now();
    IterationRecord rec;
    rec.k = k_;
    const double sigma_k = config_.sigma.value(k_);
    rec.sigma = sigma_k;
    const Vector zeta1 = tracker_.zeta;

    const BigThetaResult bt = tolerant_big_theta();
    rec.direction_failures += std::exchange(pending_direction_failures_, 0);
    rec.theta = bt.value;
    rec.size_x = x_.size();
    rec.hv_x = frozen_hv(x_, zeta1);

    // processing order: ascending theta, stable within ties, so the first point
    // processed is one attaining the front minimum
    std::vector<std::size_t> order(x_.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return x_[a].dir_cache->theta < x_[b].dir_cache->theta;
    });

    FrontSet xhat;
    if (config_.solver == SolverKind::FPD_NMT) {
        int l_iter = 0;
        double hv_xl = 0.0, hv_cprev = 0.0;
        FrontSet c = build_reference_set(zeta1, l_iter, hv_xl, hv_cprev);
        rec.hv_c = frozen_hv(c, zeta1);
        if (config_.certify) {
            certify_reference(c, *rec.hv_c, hv_xl, hv_cprev);
            recent_refs_.emplace_back(k_, c);
        }
        refstate_previous_ = std::move(refstate_current_);
        refstate_current_ = c;
        xhat = std::move(c);
    } else {
        xhat = x_;
    }

    const bool snapshot_due =
        config_.snapshot_every > 0 && (k_ % config_.snapshot_every == 0);
    if (snapshot_due) {
        rec.snapshot_x = fx_of(x_);
        if (config_.solver == SolverKind::FPD_NMT) rec.snapshot_c = fx_of(refstate_current_);
    }

    bool first_processed = true;
    for (std::size_t idx : order) {
        const DecisionPoint& xp = x_[idx];
        if (is_dominated(xhat, xp)) continue;  // a refinement made earlier this iteration already dominates it
        ++rec.processed;
        if (config_.certify && first_processed)
            report_.record("steepest_point_first", xp.dir_cache->theta == bt.value,
                           "iteration " + std::to_string(k_));
        first_processed = false;

        const DirectionOutcome& dir = *xp.dir_cache;
        DecisionPoint z;
        bool fresh = false;
        if (dir.theta < -sigma_k) {
            SearchResult res;
            bool refined = false;
            try {
                if (config_.solver == SolverKind::FPD_NMT) {
                    bool eligible = false;
                    for (const auto& cd : xhat)
                        if (leq(xp.fx, cd.fx)) {
                            eligible = true;
                            break;
                        }
                    res = eligible ? nonmonotone_armijo(problem_, xp.x, xp.fx, dir.v,
                                                        dir.d_value, xhat, config_.armijo)
                                   : monotone_armijo(problem_, xp.x, xp.fx, dir.v, dir.d_value,
                                                     config_.armijo);
                } else {
                    res = monotone_armijo(problem_, xp.x, xp.fx, dir.v, dir.d_value,
                                          config_.armijo);
                }
                refined = true;
            } catch (const std::runtime_error&) {
                // nonsmooth kinks can defeat backtracking even though the linearized
                // model predicts descent; keep the point (alpha = 0) and count it
                ++rec.phase1_failures;
                rec.phase1_trials += std::size_t(config_.armijo.max_backtracks);
            }
            if (refined) {
                rec.alpha_sum += res.alpha;
                ++rec.alpha_count;
                rec.phase1_trials += res.trials;
                z = make_point(std::move(res.trial_x), std::move(res.trial_fx));
                fresh = true;
            } else {
                z = xp;
            }
        } else {
            z = xp;  // alpha = 0, keep identity and caches
        }

        // phase 2 needs J(z); cache it on z so survivors reuse it next iteration
        if (problem_.n_objectives() >= 2 && !z.jac_cache)
            z.jac_cache = std::make_shared<Matrix>(problem_.jacobian(z.x));
        const Vector z_x = z.x;
        const Vector z_fx = z.fx;
        const auto z_jac = z.jac_cache;

        insert_and_filter(xhat, std::move(z));  // keep the refined point (no-op when an equal objective vector exists)
        if (fresh) tracker_.update(z_fx);
        if (config_.certify)
            report_.record("refined_point_kept", contains_fx(xhat, z_fx),
                           "iteration " + std::to_string(k_));

        if (problem_.n_objectives() < 2) continue;
        std::vector<DirectionOutcome> subsets;
        try {
            subsets = proper_subsets_with_descent(z_x, *z_jac, problem_.bounds(),
                                                  config_.direction);
        } catch (const std::runtime_error&) {
            ++rec.direction_failures;  // no exploration from this point this iteration
        }
        for (const auto& sub : subsets) {
            if (!contains_fx(xhat, z_fx)) break;  // stop exploring once the source point left the working set
            SearchResult res = exploration_search(problem_, z_x, sub.v, xhat, config_.armijo);
            rec.exploration_trials += res.trials;
            if (!res.success) {
                ++rec.exploration_skips;
                continue;
            }
            const Vector w_fx = res.trial_fx;
            DecisionPoint w = make_point(std::move(res.trial_x), std::move(res.trial_fx));
            const bool inserted = insert_and_filter(xhat, std::move(w));
            tracker_.update(w_fx);
            if (config_.certify)
                report_.record("exploration_inserted", inserted,
                               "iteration " + std::to_string(k_));
        }
    }

    FrontSet next;
    if (config_.solver == SolverKind::FPD_NMT) {
        const Vector zeta2 = tracker_.zeta;
        int xbar_iter = 0;
        next = finalize_nmt(std::move(xhat), zeta2, xbar_iter);
        argmin_token_ = xbar_iter;
    } else {
        next = std::move(xhat);
    }
    if (config_.certify) certify_front(next, x_);
    if (next.size() > config_.crowding_cap) next = crowding_prune(next, config_.crowding_cap);

    x_ = std::move(next);
    ++k_;
    window_.push_front({k_, x_});
    while (window_.size() > config_.memory_M + 1) window_.pop_back();

    if (config_.certify) {
        // delayed coverage checks: members of recent C^k stay weakly covered by X^{k~}
        for (const auto& [k0, cset] : recent_refs_) {
            if (k_ - k0 > 2) continue;
            bool ok = true;
            for (const auto& y : cset)
                if (!covers(y.fx, x_)) ok = false;
            report_.record("reference_covered_within_two", ok,
                           "C^" + std::to_string(k0) + " vs X^" + std::to_string(k_));
        }
        while (!recent_refs_.empty() && recent_refs_.front().first < k_ - 1)
            recent_refs_.pop_front();
    }

    rec.objective_evals = problem_.counter().objectives();
    rec.jacobian_evals = problem_.counter().jacobians();
    wall_accum_ += seconds_since(t0);
    rec.wall_seconds = wall_accum_;
    return rec;
}

RunTrace Driver::run() {
    require_initialized();
    RunTrace tr;
    tr.problem = problem_.name();
    tr.n = problem_.dim();
    tr.m = problem_.n_objectives();
    tr.solver = config_.solver;

    const auto t0 = Clock::now();
    while (true) {
        if (k_ >= config_.stop.max_iterations) {
            tr.status = "max_iterations";
            break;
        }
        if (config_.stop.wall_clock_seconds > 0.0 &&
            seconds_since(t0) >= config_.stop.wall_clock_seconds) {
            tr.status = "wall_clock";
            break;
        }
        if (config_.sigma.kind == SigmaSchedule::Kind::Constant && config_.stop.stall_window > 0) {
            const double theta = tolerant_big_theta().value;
            if (theta >= -config_.sigma.sigma)
                ++stall_streak_;
            else
                stall_streak_ = 0;
            if (stall_streak_ >= config_.stop.stall_window) {
                tr.status = "stationarity_stall";
                break;
            }
        }
        try {
            tr.records.push_back(step());
        } catch (const std::exception& e) {
            throw std::runtime_error(problem_.name() + " iteration " + std::to_string(k_) +
                                     ": " + e.what());
        }
    }

    tr.final_front = x_;
    tr.final_zeta = tracker_.zeta;
    tr.final_theta = tolerant_big_theta().value;
    tr.final_fx = fx_of(x_);
    tr.total_objective_evals = problem_.counter().objectives();
    tr.total_jacobian_evals = problem_.counter().jacobians();
    tr.total_processed = 0;
    for (const auto& r : tr.records) tr.total_processed += r.processed;
    tr.wall_seconds = seconds_since(t0);
    tr.certification = report_;
    return tr;
}

FrontSet fpd_iteration(const Problem& problem, const FrontSet& x, const DriverConfig& config) {
    DriverConfig cfg = config;
    cfg.solver = SolverKind::FPD;
    Driver d(problem, cfg);
    std::vector<Vector> starts;
    for (const auto& p : x) starts.push_back(p.x);
    d.initialize(starts);
    d.step();
    return d.front();
}

FrontSet fpd_nmt_iteration(const Problem& problem, const FrontSet& x, const DriverConfig& config) {
    DriverConfig cfg = config;
    cfg.solver = SolverKind::FPD_NMT;
    Driver d(problem, cfg);
    std::vector<Vector> starts;
    for (const auto& p : x) starts.push_back(p.x);
    d.initialize(starts);
    d.step();
    return d.front();
}

RunTrace run(const Problem& problem, const DriverConfig& config) {
    Driver d(problem, config);
    return d.run();
}

}  // namespace fpd
