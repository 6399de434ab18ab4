#pragma once

#include <string>
#include <vector>

#include "fpd/driver.hpp"
#include "fpd/pareto.hpp"

namespace fpd {

// Finite stand-in for "never in the reference front" so profile ratios stay finite.
inline constexpr double kZeroPuritySentinel = 1e12;

// Nondominated union of several final fronts (objective vectors only).  Duplicate
// objective vectors collapse to one representative, like every other front filter.
struct ReferenceFront {
    FrontSet points;
};

ReferenceFront build_reference_front(const std::vector<std::vector<Vector>>& solver_fronts);

// Fraction of the solver's final points that appear in the reference front,
// membership by exact objective-vector equality.  Throws on an empty front.
double purity(const std::vector<Vector>& solver_fx, const ReferenceFront& reference);
double purity(const FrontSet& solver_front, const ReferenceFront& reference);

// Average objective evaluations per processed point over a whole run.
double nf_mean(const RunTrace& trace);
// Average accepted refinement step size over a whole run (alpha = 0 skips excluded).
double alpha_mean(const RunTrace& trace);
// Same, from reloaded artifacts: totals instead of a live trace.
double nf_mean(std::uint64_t objective_evals, std::size_t processed);
double alpha_mean(double alpha_sum, std::size_t alpha_count);

// Transforms that make "lower is better" hold for every profile input.
double transform_purity(double raw);                      // 1/p, 0 -> sentinel
double transform_alpha(double raw);                       // 1/alpha
double transform_hv(double v_reference, double v_solver); // V_R - V_s + 1e-7

// rows = problem instances, cols = solvers, values > 0 and lower is better.
struct MetricMatrix {
    std::vector<std::string> solvers;
    std::vector<std::string> instances;
    std::vector<std::vector<double>> values;  // values[instance][solver]
};

struct ProfilePoint {
    std::string solver;
    double tau = 0.0;
    double rho = 0.0;
};

// Dolan-More profiles: per-problem ratios to the best solver, cumulative fraction
// within factor tau.  Breakpoints are the merged sorted distinct ratios of all
// solvers so the emitted step functions share a tau axis.
std::vector<ProfilePoint> performance_profiles(const MetricMatrix& matrix);

}  // namespace fpd
