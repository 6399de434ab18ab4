#include "fpd/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "fpd/metrics.hpp"
#include "fpd/problems.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace fpd {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

struct Cell {
    std::string problem;
    std::size_t n = 0;
    SolverSpec solver;
    std::string dir;
};

std::vector<Cell> expand_cells(const ExperimentConfig& config) {
    std::vector<Cell> cells;
    for (const auto& [name, n] : config.problems)
        for (const auto& spec : config.solvers) {
            Cell c;
            c.problem = name;
            c.n = n;
            c.solver = spec;
            c.dir = cell_dir_name(name, n, spec.label);
            cells.push_back(std::move(c));
        }
    return cells;
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for write: " + path.string());
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

CellResult run_cell(const ExperimentConfig& config, const Cell& cell) {
    CellResult result;
    result.cell = cell.dir;
    const fs::path dir = fs::path(config.output_dir) / cell.dir;
    json meta;
    meta["cell"] = cell.dir;
    meta["problem"] = cell.problem;
    meta["n"] = cell.n;
    meta["solver"] = solver_name(cell.solver.kind);
    meta["solver_label"] = cell.solver.label;
    meta["M"] = cell.solver.memory_M;
    meta["seed"] = config.seed;
    try {
        fs::create_directories(dir);
        auto problem = registry().create(cell.problem, cell.n);
        DriverConfig dc = config.driver;
        dc.solver = cell.solver.kind;
        dc.memory_M = cell.solver.memory_M;
        dc.snapshot_every =
            config.snapshot_every >= 0 ? config.snapshot_every : (cell.n <= 10 ? 1 : 10);

        Driver driver(*problem, dc);
        RunTrace trace = driver.run();

        write_trace_jsonl(trace, dc, (dir / "trace.jsonl").string());
        write_front_csv(trace.final_front, problem->dim(), problem->n_objectives(),
                        (dir / "front.csv").string());
        std::string snapshot = config_snapshot_text(dc, cell.problem, cell.n);
        snapshot += "seed = " + std::to_string(config.seed) + "\n";
        snapshot += "solver_label = " + cell.solver.label + "\n";
        write_file(dir / "config.txt", snapshot);

        meta["status"] = "ok";
        meta["run_status"] = trace.status;
        meta["iterations"] = trace.records.size();
        meta["wall_seconds"] = trace.wall_seconds;
        result.ok = true;
    } catch (const std::exception& e) {
        meta["status"] = "failed";
        meta["error"] = e.what();
        result.ok = false;
        result.error = e.what();
    }
    try {
        write_file(dir / "meta.json", meta.dump(2) + "\n");
    } catch (const std::exception& e) {
        if (result.ok) {
            result.ok = false;
            result.error = e.what();
        }
    }
    return result;
}

struct CellSummary {
    std::string problem;
    std::size_t n = 0;
    std::string solver;
    std::vector<Vector> final_fx;
    Vector final_zeta;
    std::uint64_t objective_evals = 0;
    std::size_t processed = 0;
    double alpha_sum = 0.0;
    std::size_t alpha_count = 0;
};

CellSummary load_summary(const fs::path& dir) {
    std::ifstream meta_in(dir / "meta.json");
    if (!meta_in) throw std::runtime_error("missing meta.json in " + dir.string());
    json meta = json::parse(meta_in);
    if (meta.at("status").get<std::string>() != "ok")
        throw std::runtime_error("cell failed: " + dir.string());

    LoadedTrace loaded = read_trace_jsonl((dir / "trace.jsonl").string());
    CellSummary s;
    s.problem = meta.at("problem").get<std::string>();
    s.n = meta.at("n").get<std::size_t>();
    s.solver = meta.at("solver_label").get<std::string>();
    s.final_fx = loaded.trace.final_fx;
    s.final_zeta = loaded.trace.final_zeta;
    s.objective_evals = loaded.trace.total_objective_evals;
    s.processed = loaded.trace.total_processed;
    for (const auto& r : loaded.trace.records) {
        s.alpha_sum += r.alpha_sum;
        s.alpha_count += r.alpha_count;
    }
    return s;
}

std::function<bool(std::size_t)> parse_dims_filter(const std::string& expr) {
    if (expr.empty()) return [](std::size_t) { return true; };
    std::string e;
    for (char ch : expr)
        if (!std::isspace(static_cast<unsigned char>(ch))) e.push_back(ch);
    if (e.size() < 3 || e[0] != 'n')
        throw std::invalid_argument("bad dims filter (want e.g. \"n>30\"): " + expr);
    std::size_t pos = 1;
    std::string op;
    while (pos < e.size() && (e[pos] == '>' || e[pos] == '<' || e[pos] == '=' || e[pos] == '!'))
        op.push_back(e[pos++]);
    const std::string num = e.substr(pos);
    if (op.empty() || num.empty())
        throw std::invalid_argument("bad dims filter (want e.g. \"n>30\"): " + expr);
    std::size_t cut = std::stoul(num);
    if (op == ">") return [cut](std::size_t n) { return n > cut; };
    if (op == ">=") return [cut](std::size_t n) { return n >= cut; };
    if (op == "<") return [cut](std::size_t n) { return n < cut; };
    if (op == "<=") return [cut](std::size_t n) { return n <= cut; };
    if (op == "==" || op == "=") return [cut](std::size_t n) { return n == cut; };
    if (op == "!=") return [cut](std::size_t n) { return n != cut; };
    throw std::invalid_argument("bad dims filter operator: " + expr);
}

void write_profile_csv(const fs::path& path, const std::vector<ProfilePoint>& points) {
    std::FILE* f = std::fopen(path.string().c_str(), "w");
    if (!f) throw std::runtime_error("cannot open for write: " + path.string());
    std::fputs("solver,tau,rho\n", f);
    for (const auto& p : points)
        std::fprintf(f, "%s,%.17g,%.17g\n", p.solver.c_str(), p.tau, p.rho);
    if (std::fclose(f) != 0) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace

std::string cell_dir_name(const std::string& problem, std::size_t n, const std::string& label) {
    return problem + "_n" + std::to_string(n) + "_" + label;
}

ExperimentConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file: " + path);

    std::map<std::string, std::string> kv;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                        ": expected key = value");
        kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }

    ExperimentConfig config;
    auto take = [&](const char* key) -> std::string {
        auto it = kv.find(key);
        if (it == kv.end()) return {};
        std::string v = it->second;
        kv.erase(it);
        return v;
    };

    std::vector<std::size_t> dims;
    if (std::string v = take("dims"); !v.empty())
        for (const auto& d : split_list(v)) dims.push_back(std::stoul(d));

    std::size_t default_m = config.driver.memory_M;
    if (std::string v = take("M"); !v.empty()) default_m = std::stoul(v);

    if (std::string v = take("problems"); !v.empty()) {
        for (const auto& entry : split_list(v)) {
            const std::size_t colon = entry.find(':');
            if (colon != std::string::npos) {
                config.problems.emplace_back(trim(entry.substr(0, colon)),
                                             std::stoul(entry.substr(colon + 1)));
            } else {
                if (dims.empty())
                    throw std::invalid_argument("problem " + entry +
                                                " has no dimension: give NAME:N or set dims");
                for (std::size_t n : dims) config.problems.emplace_back(entry, n);
            }
        }
    }

    if (std::string v = take("solvers"); !v.empty()) {
        for (const auto& entry : split_list(v)) {
            SolverSpec spec;
            const std::size_t colon = entry.find(':');
            std::string name = entry;
            spec.memory_M = default_m;
            if (colon != std::string::npos) {
                name = trim(entry.substr(0, colon));
                spec.memory_M = std::stoul(entry.substr(colon + 1));
            }
            spec.kind = solver_from_name(name);
            config.solvers.push_back(spec);
        }
    }

    config.driver.memory_M = default_m;
    if (std::string v = take("alpha0"); !v.empty()) config.driver.armijo.alpha0 = std::stod(v);
    if (std::string v = take("delta"); !v.empty()) config.driver.armijo.delta = std::stod(v);
    if (std::string v = take("gamma"); !v.empty()) config.driver.armijo.gamma = std::stod(v);
    if (std::string v = take("max_backtracks"); !v.empty())
        config.driver.armijo.max_backtracks = std::stoi(v);
    if (std::string v = take("dual_tolerance"); !v.empty())
        config.driver.direction.dual_tolerance = std::stod(v);
    if (std::string v = take("max_dual_iters"); !v.empty())
        config.driver.direction.max_dual_iters = std::stoi(v);
    if (std::string v = take("sigma_mode"); !v.empty()) {
        if (v == "constant")
            config.driver.sigma.kind = SigmaSchedule::Kind::Constant;
        else if (v == "geometric")
            config.driver.sigma.kind = SigmaSchedule::Kind::Geometric;
        else
            throw std::invalid_argument("sigma_mode must be constant or geometric, got " + v);
    }
    if (std::string v = take("sigma"); !v.empty()) config.driver.sigma.sigma = std::stod(v);
    if (std::string v = take("sigma0"); !v.empty()) config.driver.sigma.sigma0 = std::stod(v);
    if (std::string v = take("rho"); !v.empty()) config.driver.sigma.rho = std::stod(v);
    if (std::string v = take("crowding_cap"); !v.empty())
        config.driver.crowding_cap = std::stoul(v);
    if (std::string v = take("max_iters"); !v.empty())
        config.driver.stop.max_iterations = std::stoi(v);
    if (std::string v = take("wall_clock_seconds"); !v.empty())
        config.driver.stop.wall_clock_seconds = std::stod(v);
    if (std::string v = take("stall_window"); !v.empty())
        config.driver.stop.stall_window = std::stoi(v);
    if (std::string v = take("certify"); !v.empty())
        config.driver.certify = (v == "1" || v == "true");
    if (std::string v = take("snapshot_every"); !v.empty())
        config.snapshot_every = std::stoi(v);
    if (std::string v = take("seed"); !v.empty()) config.seed = std::stol(v);
    if (std::string v = take("out"); !v.empty()) config.output_dir = v;
    if (std::string v = take("threads"); !v.empty()) config.threads = std::stoi(v);

    if (!kv.empty())
        throw std::invalid_argument("unknown config key in " + path + ": " + kv.begin()->first);
    return config;
}

void validate_config(ExperimentConfig& config) {
    if (config.problems.empty()) throw std::invalid_argument("config: no problems given");
    if (config.solvers.empty()) throw std::invalid_argument("config: no solvers given");

    std::size_t nmt_specs = 0;
    for (const auto& s : config.solvers) {
        if (s.memory_M == 0) throw std::invalid_argument("config: M must be >= 1");
        if (s.kind == SolverKind::FPD_NMT) ++nmt_specs;
    }
    for (auto& s : config.solvers) {
        if (!s.label.empty()) continue;
        if (s.kind == SolverKind::FPD)
            s.label = "FPD";
        else
            s.label = nmt_specs > 1 ? "FPD_NMT_M" + std::to_string(s.memory_M) : "FPD_NMT";
    }

    std::vector<std::string> seen;
    for (const auto& [name, n] : config.problems)
        for (const auto& spec : config.solvers) {
            const std::string cell = cell_dir_name(name, n, spec.label);
            if (std::find(seen.begin(), seen.end(), cell) != seen.end())
                throw std::invalid_argument("duplicate cell in config: " + cell);
            seen.push_back(cell);
            try {
                auto p = registry().create(name, n);  // validates name and dimension
                (void)p;
            } catch (const std::exception& e) {
                throw std::invalid_argument("bad cell " + cell + ": " + e.what());
            }
        }
}

std::vector<CellResult> cmd_run(ExperimentConfig config) {
    validate_config(config);
    fs::create_directories(config.output_dir);

    const std::vector<Cell> cells = expand_cells(config);
    std::vector<CellResult> results(cells.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= cells.size()) return;
            results[i] = run_cell(config, cells[i]);
        }
    };

    std::size_t threads = config.threads > 0 ? std::size_t(config.threads)
                                             : std::size_t(std::thread::hardware_concurrency());
    threads = std::max<std::size_t>(1, std::min(threads, cells.size()));
    if (threads == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }
    return results;
}

void cmd_metrics(const std::string& artifact_dir, const MetricsOptions& options) {
    const auto keep_n = parse_dims_filter(options.dims_filter);

    std::vector<std::string> cell_dirs;
    for (const auto& entry : fs::directory_iterator(artifact_dir))
        if (entry.is_directory() && fs::exists(entry.path() / "meta.json"))
            cell_dirs.push_back(entry.path().filename().string());
    std::sort(cell_dirs.begin(), cell_dirs.end());
    if (cell_dirs.empty())
        throw std::invalid_argument("no artifacts under " + artifact_dir);

    // group summaries by problem instance
    std::map<std::pair<std::string, std::size_t>, std::vector<CellSummary>> groups;
    for (const auto& name : cell_dirs) {
        CellSummary s;
        try {
            s = load_summary(fs::path(artifact_dir) / name);
        } catch (const std::exception& e) {
            std::cerr << "metrics: skipping " << name << ": " << e.what() << '\n';
            continue;
        }
        if (!keep_n(s.n)) continue;
        groups[{s.problem, s.n}].push_back(std::move(s));
    }

    std::vector<std::string> solvers;
    std::map<std::pair<std::string, std::size_t>, std::vector<CellSummary>> valid;
    for (auto& [key, cells] : groups) {
        if (cells.size() < 2) {
            std::cerr << "metrics: skipping " << key.first << " n=" << key.second
                      << ": needs at least two solver artifacts for a reference union\n";
            continue;
        }
        std::sort(cells.begin(), cells.end(),
                  [](const CellSummary& a, const CellSummary& b) { return a.solver < b.solver; });
        std::vector<std::string> names;
        for (const auto& c : cells) names.push_back(c.solver);
        if (solvers.empty())
            solvers = names;
        else if (solvers != names)
            throw std::invalid_argument("inconsistent solver sets across problem instances");
        valid.emplace(key, std::move(cells));
    }
    if (valid.empty())
        throw std::invalid_argument("no problem instance has two or more solver artifacts");

    MetricMatrix mat_purity, mat_hv, mat_nf, mat_alpha;
    for (auto* m : {&mat_purity, &mat_hv, &mat_nf, &mat_alpha}) m->solvers = solvers;

    const fs::path out_metrics = fs::path(artifact_dir) / "metrics.csv";
    std::FILE* f = std::fopen(out_metrics.string().c_str(), "w");
    if (!f) throw std::runtime_error("cannot open for write: " + out_metrics.string());
    std::fputs("problem,solver,n,purity,hv,hv_transformed,nf_mean,alpha_mean\n", f);

    for (const auto& [key, cells] : valid) {
        const auto& [problem, n] = key;
        std::vector<std::vector<Vector>> fronts;
        for (const auto& c : cells) fronts.push_back(c.final_fx);
        const ReferenceFront ref = build_reference_front(fronts);

        // common reference point: componentwise max of the per-run zeta trackers
        Vector zeta = cells.front().final_zeta;
        for (const auto& c : cells)
            for (std::size_t j = 0; j < zeta.size(); ++j)
                zeta[j] = std::max(zeta[j], c.final_zeta[j]);
        std::vector<Vector> ref_fx;
        for (const auto& p : ref.points) ref_fx.push_back(p.fx);
        const double v_ref = hypervolume(ref_fx, zeta);

        const std::string instance = problem + "_n" + std::to_string(n);
        std::vector<double> row_p, row_h, row_n, row_a;
        for (const auto& c : cells) {
            const double pur = purity(c.final_fx, ref);
            const double v_s = hypervolume(c.final_fx, zeta);
            const double hv_t = transform_hv(v_ref, v_s);
            double nf = 0.0, am = 0.0;
            try {
                nf = nf_mean(c.objective_evals, c.processed);
                am = alpha_mean(c.alpha_sum, c.alpha_count);
            } catch (const std::exception& e) {
                std::fclose(f);
                throw std::invalid_argument("metrics for " +
                                            cell_dir_name(problem, n, c.solver) + ": " +
                                            e.what());
            }
            std::fprintf(f, "%s,%s,%zu,%.17g,%.17g,%.17g,%.17g,%.17g\n", problem.c_str(),
                         c.solver.c_str(), n, pur, v_s, hv_t, nf, am);
            row_p.push_back(transform_purity(pur));
            row_h.push_back(hv_t);
            row_n.push_back(nf);
            row_a.push_back(transform_alpha(am));
        }
        for (auto* m : {&mat_purity, &mat_hv, &mat_nf, &mat_alpha}) m->instances.push_back(instance);
        mat_purity.values.push_back(std::move(row_p));
        mat_hv.values.push_back(std::move(row_h));
        mat_nf.values.push_back(std::move(row_n));
        mat_alpha.values.push_back(std::move(row_a));
    }
    if (std::fclose(f) != 0) throw std::runtime_error("write failed: " + out_metrics.string());

    write_profile_csv(fs::path(artifact_dir) / "profile_purity.csv",
                      performance_profiles(mat_purity));
    write_profile_csv(fs::path(artifact_dir) / "profile_hv.csv", performance_profiles(mat_hv));
    write_profile_csv(fs::path(artifact_dir) / "profile_nf.csv", performance_profiles(mat_nf));
    write_profile_csv(fs::path(artifact_dir) / "profile_alpha.csv",
                      performance_profiles(mat_alpha));
}

void cmd_front_dump(const std::string& cell_dir, int k, std::ostream& out) {
    const LoadedTrace loaded = read_trace_jsonl((fs::path(cell_dir) / "trace.jsonl").string());
    const auto& records = loaded.trace.records;
    if (records.empty()) throw std::invalid_argument("trace has no recorded iterations");
    const int last_k = records.back().k;
    if (k < 0 || k > last_k)
        throw std::invalid_argument("iteration " + std::to_string(k) +
                                    " beyond final recorded iteration " + std::to_string(last_k));
    const IterationRecord* rec = nullptr;
    for (const auto& r : records)
        if (r.k == k) rec = &r;
    if (rec == nullptr || !rec->snapshot_x)
        throw std::invalid_argument("iteration " + std::to_string(k) +
                                    " was not snapshotted (adjust snapshot_every)");

    out << "set";
    for (std::size_t j = 1; j <= loaded.trace.m; ++j) out << ",f" << j;
    out << '\n';
    char buf[64];
    auto emit = [&](const char* label, const std::vector<Vector>& pts) {
        for (const auto& fx : pts) {
            out << label;
            for (double v : fx) {
                std::snprintf(buf, sizeof buf, ",%.17g", v);
                out << buf;
            }
            out << '\n';
        }
    };
    emit("X", *rec->snapshot_x);
    if (rec->snapshot_c) emit("C", *rec->snapshot_c);
}

void cmd_list_problems(std::ostream& out) {
    for (const auto& name : registry().names()) out << name << '\n';
}

}  // namespace fpd
