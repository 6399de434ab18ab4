#include "fpd/trace_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace fpd {

using nlohmann::json;

namespace {

json config_to_json(const DriverConfig& c) {
    json j;
    j["solver"] = solver_name(c.solver);
    j["armijo"] = {{"alpha0", c.armijo.alpha0},
                   {"delta", c.armijo.delta},
                   {"gamma", c.armijo.gamma},
                   {"max_backtracks", c.armijo.max_backtracks}};
    j["direction"] = {{"dual_tolerance", c.direction.dual_tolerance},
                      {"max_dual_iters", c.direction.max_dual_iters}};
    j["sigma"] = {{"kind", c.sigma.kind == SigmaSchedule::Kind::Constant ? "constant" : "geometric"},
                  {"sigma", c.sigma.sigma},
                  {"sigma0", c.sigma.sigma0},
                  {"rho", c.sigma.rho}};
    j["memory_M"] = c.memory_M;
    j["crowding_cap"] = c.crowding_cap;
    j["stop"] = {{"max_iterations", c.stop.max_iterations},
                 {"wall_clock_seconds", c.stop.wall_clock_seconds},
                 {"stall_window", c.stop.stall_window}};
    j["snapshot_every"] = c.snapshot_every;
    j["certify"] = c.certify;
    return j;
}

DriverConfig config_from_json(const json& j) {
    DriverConfig c;
    c.solver = solver_from_name(j.at("solver").get<std::string>());
    const auto& a = j.at("armijo");
    c.armijo.alpha0 = a.at("alpha0").get<double>();
    c.armijo.delta = a.at("delta").get<double>();
    c.armijo.gamma = a.at("gamma").get<double>();
    c.armijo.max_backtracks = a.at("max_backtracks").get<int>();
    const auto& d = j.at("direction");
    c.direction.dual_tolerance = d.at("dual_tolerance").get<double>();
    c.direction.max_dual_iters = d.at("max_dual_iters").get<int>();
    const auto& s = j.at("sigma");
    c.sigma.kind = s.at("kind").get<std::string>() == "constant" ? SigmaSchedule::Kind::Constant
                                                                 : SigmaSchedule::Kind::Geometric;
    c.sigma.sigma = s.at("sigma").get<double>();
    c.sigma.sigma0 = s.at("sigma0").get<double>();
    c.sigma.rho = s.at("rho").get<double>();
    c.memory_M = j.at("memory_M").get<std::size_t>();
    c.crowding_cap = j.at("crowding_cap").get<std::size_t>();
    const auto& st = j.at("stop");
    c.stop.max_iterations = st.at("max_iterations").get<int>();
    c.stop.wall_clock_seconds = st.at("wall_clock_seconds").get<double>();
    c.stop.stall_window = st.at("stall_window").get<int>();
    c.snapshot_every = j.at("snapshot_every").get<int>();
    c.certify = j.at("certify").get<bool>();
    return c;
}

json record_to_json(const IterationRecord& r) {
    json j;
    j["k"] = r.k;
    j["size_x"] = r.size_x;
    j["hv_x"] = r.hv_x;
    if (r.hv_c) j["hv_c"] = *r.hv_c;
    j["theta"] = r.theta;
    j["sigma"] = r.sigma;
    j["processed"] = r.processed;
    j["alpha_sum"] = r.alpha_sum;
    j["alpha_count"] = r.alpha_count;
    j["phase1_trials"] = r.phase1_trials;
    j["phase1_failures"] = r.phase1_failures;
    j["exploration_trials"] = r.exploration_trials;
    j["exploration_skips"] = r.exploration_skips;
    j["direction_failures"] = r.direction_failures;
    j["objective_evals"] = r.objective_evals;
    j["jacobian_evals"] = r.jacobian_evals;
    j["wall_seconds"] = r.wall_seconds;
    if (r.snapshot_x) j["snapshot_x"] = *r.snapshot_x;
    if (r.snapshot_c) j["snapshot_c"] = *r.snapshot_c;
    return j;
}

IterationRecord record_from_json(const json& j) {
    IterationRecord r;
    r.k = j.at("k").get<int>();
    r.size_x = j.at("size_x").get<std::size_t>();
    r.hv_x = j.at("hv_x").get<double>();
    if (j.contains("hv_c")) r.hv_c = j.at("hv_c").get<double>();
    r.theta = j.at("theta").get<double>();
    r.sigma = j.at("sigma").get<double>();
    r.processed = j.at("processed").get<std::size_t>();
    r.alpha_sum = j.at("alpha_sum").get<double>();
    r.alpha_count = j.at("alpha_count").get<std::size_t>();
    r.phase1_trials = j.at("phase1_trials").get<std::size_t>();
    r.phase1_failures = j.value("phase1_failures", std::size_t(0));
    r.exploration_trials = j.at("exploration_trials").get<std::size_t>();
    r.exploration_skips = j.at("exploration_skips").get<std::size_t>();
    r.direction_failures = j.value("direction_failures", std::size_t(0));
    r.objective_evals = j.at("objective_evals").get<std::uint64_t>();
    r.jacobian_evals = j.at("jacobian_evals").get<std::uint64_t>();
    r.wall_seconds = j.at("wall_seconds").get<double>();
    if (j.contains("snapshot_x")) r.snapshot_x = j.at("snapshot_x").get<std::vector<Vector>>();
    if (j.contains("snapshot_c")) r.snapshot_c = j.at("snapshot_c").get<std::vector<Vector>>();
    return r;
}

json certification_to_json(const CertificationReport& rep) {
    json preds = json::object();
    for (const auto& [name, tally] : rep.predicates)
        preds[name] = {{"checks", tally.checks}, {"violations", tally.violations}};
    return {{"predicates", preds}, {"samples", rep.samples}};
}

CertificationReport certification_from_json(const json& j) {
    CertificationReport rep;
    for (const auto& [name, tally] : j.at("predicates").items()) {
        CertificationReport::Tally t;
        t.checks = tally.at("checks").get<std::size_t>();
        t.violations = tally.at("violations").get<std::size_t>();
        rep.predicates[name] = t;
    }
    rep.samples = j.at("samples").get<std::vector<std::string>>();
    return rep;
}

}  // namespace

void write_trace_jsonl(const RunTrace& trace, const DriverConfig& config,
                       const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for write: " + path);

    json header;
    header["schema_version"] = kTraceSchemaVersion;
    header["kind"] = "fpd_trace";
    header["problem"] = trace.problem;
    header["n"] = trace.n;
    header["m"] = trace.m;
    header["solver"] = solver_name(trace.solver);
    header["config"] = config_to_json(config);
    out << header.dump() << '\n';

    for (const auto& r : trace.records) out << record_to_json(r).dump() << '\n';

    json footer;
    footer["final"] = true;
    footer["status"] = trace.status;
    footer["final_theta"] = trace.final_theta;
    footer["final_zeta"] = trace.final_zeta;
    footer["final_fx"] = trace.final_fx;
    footer["total_objective_evals"] = trace.total_objective_evals;
    footer["total_jacobian_evals"] = trace.total_jacobian_evals;
    footer["total_processed"] = trace.total_processed;
    footer["wall_seconds"] = trace.wall_seconds;
    footer["certification"] = certification_to_json(trace.certification);
    out << footer.dump() << '\n';
    if (!out) throw std::runtime_error("write failed: " + path);
}

LoadedTrace read_trace_jsonl(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open trace: " + path);
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("empty trace: " + path);
    json header = json::parse(line);
    if (header.at("schema_version").get<int>() != kTraceSchemaVersion)
        throw std::runtime_error("unsupported trace schema in " + path);

    LoadedTrace loaded;
    RunTrace& tr = loaded.trace;
    tr.problem = header.at("problem").get<std::string>();
    tr.n = header.at("n").get<std::size_t>();
    tr.m = header.at("m").get<std::size_t>();
    tr.solver = solver_from_name(header.at("solver").get<std::string>());
    loaded.config = config_from_json(header.at("config"));

    bool saw_footer = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        json j = json::parse(line);
        if (j.contains("final") && j.at("final").get<bool>()) {
            tr.status = j.at("status").get<std::string>();
            tr.final_theta = j.at("final_theta").get<double>();
            tr.final_zeta = j.at("final_zeta").get<Vector>();
            tr.final_fx = j.at("final_fx").get<std::vector<Vector>>();
            tr.total_objective_evals = j.at("total_objective_evals").get<std::uint64_t>();
            tr.total_jacobian_evals = j.at("total_jacobian_evals").get<std::uint64_t>();
            tr.total_processed = j.at("total_processed").get<std::size_t>();
            tr.wall_seconds = j.at("wall_seconds").get<double>();
            tr.certification = certification_from_json(j.at("certification"));
            saw_footer = true;
            break;
        }
        tr.records.push_back(record_from_json(j));
    }
    if (!saw_footer) throw std::runtime_error("truncated trace (missing footer): " + path);
    return loaded;
}

void write_front_csv(const FrontSet& front, std::size_t n, std::size_t m,
                     const std::string& path) {
    std::FILE* f = std::fopen(path.c_str(), "w");
    if (!f) throw std::runtime_error("cannot open for write: " + path);
    std::fputs("id", f);
    for (std::size_t i = 1; i <= n; ++i) std::fprintf(f, ",x%zu", i);
    for (std::size_t j = 1; j <= m; ++j) std::fprintf(f, ",f%zu", j);
    std::fputc('\n', f);
    for (const auto& p : front) {
        if (p.x.size() != n || p.fx.size() != m) {
            std::fclose(f);
            throw std::invalid_argument("front point dimension mismatch in " + path);
        }
        std::fprintf(f, "%llu", static_cast<unsigned long long>(p.id));
        for (double v : p.x) std::fprintf(f, ",%.17g", v);
        for (double v : p.fx) std::fprintf(f, ",%.17g", v);
        std::fputc('\n', f);
    }
    if (std::fclose(f) != 0) throw std::runtime_error("write failed: " + path);
}

FrontSet read_front_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open front: " + path);
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("empty front file: " + path);

    std::size_t n = 0, m = 0;
    {
        std::stringstream ss(line);
        std::string col;
        while (std::getline(ss, col, ',')) {
            if (col.size() > 1 && col[0] == 'x') ++n;
            if (col.size() > 1 && col[0] == 'f') ++m;
        }
        if (m == 0) throw std::runtime_error("malformed front header in " + path);
    }

    FrontSet front;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string col;
        std::vector<std::string> cols;
        while (std::getline(ss, col, ',')) cols.push_back(col);
        if (cols.size() != 1 + n + m)
            throw std::runtime_error("malformed front row in " + path);
        DecisionPoint p;
        p.id = std::stoull(cols[0]);
        for (std::size_t i = 0; i < n; ++i) p.x.push_back(std::stod(cols[1 + i]));
        for (std::size_t j = 0; j < m; ++j) p.fx.push_back(std::stod(cols[1 + n + j]));
        front.push_back(std::move(p));
    }
    return front;
}

std::string config_snapshot_text(const DriverConfig& config, const std::string& problem,
                                 std::size_t n) {
    std::ostringstream out;
    out.precision(17);
    out << "problem = " << problem << '\n';
    out << "n = " << n << '\n';
    out << "solver = " << solver_name(config.solver) << '\n';
    out << "alpha0 = " << config.armijo.alpha0 << '\n';
    out << "delta = " << config.armijo.delta << '\n';
    out << "gamma = " << config.armijo.gamma << '\n';
    out << "max_backtracks = " << config.armijo.max_backtracks << '\n';
    out << "dual_tolerance = " << config.direction.dual_tolerance << '\n';
    out << "max_dual_iters = " << config.direction.max_dual_iters << '\n';
    out << "sigma_mode = "
        << (config.sigma.kind == SigmaSchedule::Kind::Constant ? "constant" : "geometric") << '\n';
    out << "sigma = " << config.sigma.sigma << '\n';
    out << "sigma0 = " << config.sigma.sigma0 << '\n';
    out << "rho = " << config.sigma.rho << '\n';
    out << "M = " << config.memory_M << '\n';
    out << "crowding_cap = " << config.crowding_cap << '\n';
    out << "max_iters = " << config.stop.max_iterations << '\n';
    out << "wall_clock_seconds = " << config.stop.wall_clock_seconds << '\n';
    out << "stall_window = " << config.stop.stall_window << '\n';
    out << "snapshot_every = " << config.snapshot_every << '\n';
    out << "certify = " << (config.certify ? 1 : 0) << '\n';
    return out.str();
}

}  // namespace fpd
