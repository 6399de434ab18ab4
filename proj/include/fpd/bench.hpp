#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "fpd/driver.hpp"
#include "fpd/trace_io.hpp"

namespace fpd {

struct SolverSpec {
    SolverKind kind = SolverKind::FPD;
    std::size_t memory_M = 4;  // used by FPD_NMT
    std::string label;         // directory / CSV label; derived when empty
};

struct ExperimentConfig {
    std::vector<std::pair<std::string, std::size_t>> problems;  // (name, n)
    std::vector<SolverSpec> solvers;
    DriverConfig driver;   // shared settings; solver kind / M set per cell
    long seed = 0;         // reserved: every component is deterministic today
    std::string output_dir = "bench_out";
    int threads = 0;        // 0 = hardware concurrency
    int snapshot_every = -1;  // -1 = auto: every iteration for n <= 10, every 10th above
};

// Flat key = value file; '#' starts a comment.  Recognized keys documented in README.
ExperimentConfig parse_config_file(const std::string& path);

// Fills in derived solver labels (FPD / FPD_NMT, M suffix when several NMT entries)
// and validates every cell against the registry.  Throws std::invalid_argument on
// config errors, naming the offending cell.
void validate_config(ExperimentConfig& config);

std::string cell_dir_name(const std::string& problem, std::size_t n, const std::string& label);

struct CellResult {
    std::string cell;
    bool ok = false;
    std::string error;
};

// Executes every (problem, n, solver) cell in a worker pool; artifacts land in
// output_dir/<cell>/ as config.txt, meta.json, trace.jsonl, front.csv.  Solver
// failures are recorded per cell and do not abort the run.
std::vector<CellResult> cmd_run(ExperimentConfig config);

struct MetricsOptions {
    std::string dims_filter;  // e.g. "n>30", "n<=10", "n==5"; empty = keep all
};

// Builds per-instance reference fronts from all solver artifacts under artifact_dir,
// writes metrics.csv and profile_{purity,hv,nf,alpha}.csv into artifact_dir.
void cmd_metrics(const std::string& artifact_dir, const MetricsOptions& options = {});

// Emits the objective-space snapshots of X^k (and C^k when present) at iteration k
// as CSV rows labeled X / C.
void cmd_front_dump(const std::string& cell_dir, int k, std::ostream& out);

void cmd_list_problems(std::ostream& out);

}  // namespace fpd
