#pragma once

#include <memory>
#include <string>

#include "fpd/problem.hpp"

namespace fpd {

// Benchmark suite: CEC09_1..CEC09_10 (CEC09_8/9/10 have three objectives), JOS_1, MAN,
// ZDT_1, ZDT_3.  All are registered in registry() under these names.
std::unique_ptr<Problem> make_benchmark_problem(const std::string& name, std::size_t n);

// Registers the suite into a registry (called automatically for the global one).
void register_benchmark_problems(ProblemRegistry& reg);

}  // namespace fpd
