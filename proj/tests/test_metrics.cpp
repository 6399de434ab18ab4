#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "fpd/driver.hpp"
#include "fpd/metrics.hpp"

using fpd::MetricMatrix;
using fpd::ProfilePoint;
using fpd::ReferenceFront;
using fpd::RunTrace;
using fpd::Vector;

namespace {

double rho_at(const std::vector<ProfilePoint>& pts, const std::string& solver, double tau) {
    double rho = 0.0;
    for (const auto& p : pts)
        if (p.solver == solver && p.tau <= tau + 1e-12) rho = p.rho;
    return rho;
}

}  // namespace

TEST_CASE("reference front is the nondominated union with duplicates collapsed") {
    const std::vector<Vector> a = {{1.0, 3.0}, {2.0, 2.0}};
    const std::vector<Vector> b = {{2.0, 2.0}, {3.0, 1.0}, {4.0, 4.0}};  // last dominated
    const auto ref = fpd::build_reference_front({a, b});
    REQUIRE(ref.points.size() == 3);
    std::vector<Vector> fx;
    for (const auto& p : ref.points) fx.push_back(p.fx);
    CHECK(std::count(fx.begin(), fx.end(), Vector{1.0, 3.0}) == 1);
    CHECK(std::count(fx.begin(), fx.end(), Vector{2.0, 2.0}) == 1);
    CHECK(std::count(fx.begin(), fx.end(), Vector{3.0, 1.0}) == 1);
}

TEST_CASE("purity counts exact objective matches against the reference") {
    const auto ref = fpd::build_reference_front({{{1.0, 3.0}, {3.0, 1.0}}});
    CHECK(fpd::purity({{1.0, 3.0}, {3.0, 1.0}}, ref) == 1.0);
    CHECK(fpd::purity({{1.0, 3.0}, {2.0, 2.0}}, ref) == 0.5);
    CHECK(fpd::purity({{2.0, 2.0}}, ref) == 0.0);
    CHECK_THROWS_AS(fpd::purity(std::vector<Vector>{}, ref), std::invalid_argument);
}

TEST_CASE("union reference always grants someone full membership") {
    const std::vector<Vector> a = {{1.0, 3.0}, {2.5, 2.5}};
    const std::vector<Vector> b = {{2.0, 2.0}, {3.0, 1.0}};
    const auto ref = fpd::build_reference_front({a, b});
    CHECK(fpd::purity(a, ref) + fpd::purity(b, ref) > 0.0);
    CHECK(fpd::purity(b, ref) == 1.0);  // b dominates the interior point of a
}

TEST_CASE("evaluation and step-size means") {
    CHECK(fpd::nf_mean(100, 20) == 5.0);
    CHECK_THROWS_AS(fpd::nf_mean(100, 0), std::invalid_argument);
    CHECK(fpd::alpha_mean(1.5, 2) == 0.75);
    CHECK_THROWS_AS(fpd::alpha_mean(0.0, 0), std::invalid_argument);

    RunTrace tr;
    tr.total_objective_evals = 100;
    tr.total_processed = 20;
    tr.records.resize(2);
    tr.records[0].alpha_sum = 1.0;
    tr.records[0].alpha_count = 1;
    tr.records[1].alpha_sum = 0.5;
    tr.records[1].alpha_count = 1;
    CHECK(fpd::nf_mean(tr) == 5.0);
    CHECK(fpd::alpha_mean(tr) == 0.75);

    RunTrace idle;
    idle.total_objective_evals = 3;
    idle.total_processed = 0;
    CHECK_THROWS_AS(fpd::nf_mean(idle), std::invalid_argument);
    CHECK_THROWS_AS(fpd::alpha_mean(idle), std::invalid_argument);
}

TEST_CASE("means agree with a live single-iteration run") {
    // F(x) = (x^2, (x-2)^2) from x = 3: one seed evaluation, two refinement trials
    // landing at x = 2, and two exploration trials landing at x = 0
    fpd::FunctionProblem p{"biquad", 1, 2, fpd::BoxBounds::uniform(1, -5.0, 5.0),
                           [](const Vector& x, Vector& f) {
                               f[0] = x[0] * x[0];
                               f[1] = (x[0] - 2.0) * (x[0] - 2.0);
                           },
                           [](const Vector& x, fpd::Matrix& j) {
                               j.at(0, 0) = 2.0 * x[0];
                               j.at(1, 0) = 2.0 * x[0] - 4.0;
                           },
                           {{3.0}}};
    fpd::DriverConfig cfg;
    cfg.solver = fpd::SolverKind::FPD;
    cfg.sigma = fpd::SigmaSchedule::constant(1e-6);
    cfg.stop.stall_window = 0;
    cfg.stop.max_iterations = 1;
    fpd::Driver d(p, cfg);
    d.initialize({{3.0}});
    const auto tr = d.run();
    CHECK(fpd::nf_mean(tr) == 5.0);
    CHECK(fpd::alpha_mean(tr) == 0.5);
}

TEST_CASE("profile transforms invert quality metrics into costs") {
    CHECK(fpd::transform_purity(0.5) == 2.0);
    CHECK(fpd::transform_purity(1.0) == 1.0);
    CHECK(fpd::transform_purity(0.0) == fpd::kZeroPuritySentinel);
    CHECK(fpd::kZeroPuritySentinel == 1e12);
    CHECK_THROWS_AS(fpd::transform_purity(-0.1), std::invalid_argument);

    CHECK(fpd::transform_alpha(0.5) == 2.0);
    CHECK_THROWS_AS(fpd::transform_alpha(0.0), std::invalid_argument);
    CHECK_THROWS_AS(fpd::transform_alpha(-1.0), std::invalid_argument);

    CHECK(fpd::transform_hv(10.0, 9.0) == doctest::Approx(1.0000001).epsilon(1e-12));
    CHECK(fpd::transform_hv(10.0, 10.0) == doctest::Approx(1e-7));
}

TEST_CASE("transforms preserve the per-problem argmin") {
    // higher raw purity / alpha / hypervolume must become the smaller cost
    CHECK(fpd::transform_purity(0.7) < fpd::transform_purity(0.3));
    CHECK(fpd::transform_purity(0.3) < fpd::transform_purity(0.0));
    CHECK(fpd::transform_alpha(1.0) < fpd::transform_alpha(0.25));
    CHECK(fpd::transform_hv(10.0, 8.0) < fpd::transform_hv(10.0, 5.0));
}

TEST_CASE("profiles on the two-by-two example") {
    MetricMatrix m;
    m.solvers = {"s1", "s2"};
    m.instances = {"p1", "p2"};
    m.values = {{1.0, 2.0}, {4.0, 2.0}};
    const auto pts = fpd::performance_profiles(m);
    REQUIRE(pts.size() == 4);  // two solvers x breakpoints {1, 2}
    CHECK(rho_at(pts, "s1", 1.0) == 0.5);
    CHECK(rho_at(pts, "s2", 1.0) == 0.5);
    CHECK(rho_at(pts, "s1", 2.0) == 1.0);
    CHECK(rho_at(pts, "s2", 2.0) == 1.0);
    CHECK(rho_at(pts, "s1", 1.5) == 0.5);  // step function holds between breakpoints
}

TEST_CASE("a uniformly best solver tops out immediately") {
    MetricMatrix m;
    m.solvers = {"best", "other"};
    m.instances = {"p1", "p2"};
    m.values = {{1.0, 2.0}, {1.0, 3.0}};
    const auto pts = fpd::performance_profiles(m);
    CHECK(rho_at(pts, "best", 1.0) == 1.0);
    CHECK(rho_at(pts, "other", 1.0) == 0.0);
    CHECK(rho_at(pts, "other", 3.0) == 1.0);
}

TEST_CASE("single problem profiles are single steps") {
    MetricMatrix m;
    m.solvers = {"s1", "s2"};
    m.instances = {"p1"};
    m.values = {{2.0, 1.0}};
    const auto pts = fpd::performance_profiles(m);
    CHECK(rho_at(pts, "s2", 1.0) == 1.0);
    CHECK(rho_at(pts, "s1", 1.0) == 0.0);
    CHECK(rho_at(pts, "s1", 2.0) == 1.0);
}

TEST_CASE("profile structural properties") {
    MetricMatrix m;
    m.solvers = {"s1", "s2", "s3"};
    m.instances = {"p1", "p2", "p3", "p4"};
    m.values = {{1.0, 3.0, 2.0}, {5.0, 5.0, 7.0}, {2.0, 1.0, 4.0}, {9.0, 3.0, 3.0}};
    const auto pts = fpd::performance_profiles(m);

    // shared tau axis, rho nondecreasing along it, ending at 1 for every solver
    double sum_at_one = 0.0;
    for (const auto& s : m.solvers) {
        double prev = -1.0;
        double last = 0.0;
        for (const auto& p : pts)
            if (p.solver == s) {
                CHECK(p.rho >= prev);
                prev = p.rho;
                last = p.rho;
            }
        CHECK(last == 1.0);
        sum_at_one += rho_at(pts, s, 1.0);
    }
    CHECK(sum_at_one >= 1.0);
}

TEST_CASE("profiles reject malformed matrices") {
    MetricMatrix empty;
    CHECK_THROWS_AS(fpd::performance_profiles(empty), std::invalid_argument);

    MetricMatrix ragged;
    ragged.solvers = {"s1", "s2"};
    ragged.instances = {"p1"};
    ragged.values = {{1.0}};
    CHECK_THROWS_AS(fpd::performance_profiles(ragged), std::invalid_argument);

    MetricMatrix missing_row;
    missing_row.solvers = {"s1"};
    missing_row.instances = {"p1", "p2"};
    missing_row.values = {{1.0}};
    CHECK_THROWS_AS(fpd::performance_profiles(missing_row), std::invalid_argument);

    MetricMatrix nonpositive;
    nonpositive.solvers = {"s1"};
    nonpositive.instances = {"p1"};
    nonpositive.values = {{0.0}};
    CHECK_THROWS_AS(fpd::performance_profiles(nonpositive), std::invalid_argument);
}
