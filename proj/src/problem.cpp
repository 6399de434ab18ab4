#include "fpd/problem.hpp"

#include <algorithm>

#include "fpd/problems.hpp"

namespace fpd {

void ProblemRegistry::add(const std::string& name, Factory f) {
    for (auto& [n, _] : factories_)
        if (n == name) throw std::invalid_argument("problem already registered: " + name);
    factories_.emplace_back(name, std::move(f));
}

bool ProblemRegistry::contains(const std::string& name) const {
    for (auto& [n, _] : factories_)
        if (n == name) return true;
    return false;
}

std::unique_ptr<Problem> ProblemRegistry::create(const std::string& name, std::size_t n) const {
    for (auto& [nm, f] : factories_)
        if (nm == name) return f(n);
    throw std::invalid_argument("unknown problem: " + name);
}

std::vector<std::string> ProblemRegistry::names() const {
    std::vector<std::string> out;
    out.reserve(factories_.size());
    for (auto& [n, _] : factories_) out.push_back(n);
    std::sort(out.begin(), out.end());
    return out;
}

ProblemRegistry& registry() {
    static ProblemRegistry reg = [] {
        ProblemRegistry r;
        register_benchmark_problems(r);
        return r;
    }();
    return reg;
}

}  // namespace fpd
