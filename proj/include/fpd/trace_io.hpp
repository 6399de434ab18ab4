#pragma once

#include <string>

#include "fpd/driver.hpp"

namespace fpd {

inline constexpr int kTraceSchemaVersion = 1;

// Line-delimited JSON: a header line (schema version, problem meta, config snapshot),
// one line per iteration record, and a footer line with the terminal state.
void write_trace_jsonl(const RunTrace& trace, const DriverConfig& config,
                       const std::string& path);

struct LoadedTrace {
    RunTrace trace;  // final_front left empty; objective vectors live in final_fx
    DriverConfig config;
};

LoadedTrace read_trace_jsonl(const std::string& path);

// CSV with header id,x1..xn,f1..fm; doubles printed with %.17g so values round-trip
// exactly (front membership tests compare fx bitwise).
void write_front_csv(const FrontSet& front, std::size_t n, std::size_t m,
                     const std::string& path);
FrontSet read_front_csv(const std::string& path);

// Human-readable flat key=value snapshot of a driver configuration.
std::string config_snapshot_text(const DriverConfig& config, const std::string& problem,
                                 std::size_t n);

}  // namespace fpd
