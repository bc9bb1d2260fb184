#include "vvdisk/cli.hpp"

#include "vvdisk/errors.hpp"

#include <omp.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>

namespace vvdisk::cli {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

SpectralCoeffs load_snapshot(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open initial snapshot " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ConfigError("snapshot " + path + ": " + e.what());
    }
    return coeffs_from_json(j);
}

SimConfig sim_config(const RunConfig& c, double nu) {
    const auto& s = c.simulation;
    SimConfig out;
    out.nu = nu;
    out.t_end = s.t_end;
    out.dt = s.dt;
    out.n_theta = s.n_theta;
    out.n_r = s.n_r;
    out.nonlinear = s.nonlinear;
    out.sample_every = s.sample_every;
    out.n_angular = s.n_angular;
    if (s.initial_path.empty()) {
        out.initial = make_preset(s.preset, s.n_theta, s.n_r, c.seed, s.amplitude);
    } else {
        out.initial = load_snapshot(s.initial_path);
        if (out.initial.n_theta() != s.n_theta || out.initial.n_r() != s.n_r) {
            throw ConfigError("initial snapshot truncation differs from simulation.n_theta/n_r");
        }
    }
    for (const json& f : s.forcing) out.forcing.frames.push_back(coeffs_from_json(f));
    return out;
}

Eigenbasis basis_for(const RunConfig& c) {
    return Eigenbasis(std::max(1, c.simulation.n_theta), c.simulation.n_r);
}

std::vector<DiagnosticsRow> evaluate_kinds(const RunConfig& c, const Eigenbasis& basis,
                                           const SimTrace& trace, const std::vector<std::string>& kinds) {
    const double nu = trace.nu;
    std::map<ConditionKind, double> values;
    bool need_functionals = false;
    for (const auto& k : kinds) need_functionals |= k != "gap";
    if (need_functionals) {
        c.schedule.validate_at(nu);
        values = FunctionalEvaluator(basis, trace, c.schedule).evaluate(true);
    }
    std::vector<DiagnosticsRow> rows;
    for (const auto& k : kinds) {
        DiagnosticsRow r;
        r.nu = nu;
        r.kind = k;
        r.L = c.schedule.L(nu);
        r.M = c.schedule.M(nu);
        r.delta = c.schedule.delta(nu);
        r.c = c.schedule.c;
        r.value = k == "gap" ? vv_gap(trace, steady_reference(trace), basis)
                             : values.at(condition_from_string(k));
        rows.push_back(r);
    }
    return rows;
}

void write_manifest(const RunConfig& c, const std::vector<std::string>& outputs) {
    json m;
    m["config"] = to_json(c);
    m["outputs"] = outputs;
    write_file(fs::path(c.out) / "manifest.json", m.dump(2) + "\n");
}

int cmd_zeros(const RunConfig& c, std::ostream& log) {
    write_file(fs::path(c.out) / "zeros.csv", zeros_csv(c.table.n_max, c.table.k_max));
    write_manifest(c, {"zeros.csv"});
    log << "zeros: wrote " << (fs::path(c.out) / "zeros.csv").string() << "\n";
    return 0;
}

int cmd_basis(const RunConfig& c, std::ostream& log) {
    std::string text;
    if (c.table.k_max < 1) {
        text = basis_csv(Eigenbasis(0, 1), -1, 0);
    } else {
        text = basis_csv(Eigenbasis(c.table.n_max, c.table.k_max), c.table.n_max, c.table.k_max);
    }
    write_file(fs::path(c.out) / "basis.csv", text);
    write_manifest(c, {"basis.csv"});
    log << "basis: wrote " << (fs::path(c.out) / "basis.csv").string() << "\n";
    return 0;
}

int cmd_simulate(const RunConfig& c, std::ostream& log) {
    const Eigenbasis basis = basis_for(c);
    const SimConfig cfg = sim_config(c, c.simulation.nu);
    const SimTrace trace = simulate(cfg, basis);
    std::vector<std::string> outputs{"trace.csv"};
    write_file(fs::path(c.out) / "trace.csv", trace_csv(trace));

    const std::size_t ns = trace.samples.size();
    const std::size_t every = static_cast<std::size_t>(c.simulation.snapshot_every);
    int index = 0;
    for (std::size_t i = 0; i < ns; ++i) {
        const bool keep = i == 0 || i + 1 == ns || (every > 0 && i % every == 0);
        if (!keep) continue;
        char name[64];
        std::snprintf(name, sizeof name, "snapshots/snap_%04d.json", index++);
        write_file(fs::path(c.out) / name, to_json(trace.samples[i]).dump(1) + "\n");
        outputs.emplace_back(name);
    }
    if (trace.aborted) {
        write_manifest(c, outputs);
        log << "simulate: aborted: " << trace.failure << "\n";
        return 1;
    }
    if (!c.simulation.kinds.empty()) {
        write_file(fs::path(c.out) / "diagnostics.csv",
                   diagnostics_csv(evaluate_kinds(c, basis, trace, c.simulation.kinds)));
        outputs.emplace_back("diagnostics.csv");
    }
    write_manifest(c, outputs);
    log << "simulate: " << trace.rows.size() - 1 << " steps, dt = " << trace.dt << ", "
        << index << " snapshots\n";
    return 0;
}

int cmd_sweep(const RunConfig& c, std::ostream& log) {
    const Eigenbasis basis = basis_for(c);
    const std::vector<SweepPoint> points = run_sweep(c, basis);
    std::vector<DiagnosticsRow> rows;
    std::string failures = "nu,error\n";
    int failed = 0;
    for (const auto& p : points) {
        rows.insert(rows.end(), p.rows.begin(), p.rows.end());
        if (!p.failure.empty()) {
            ++failed;
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.17g", p.nu);
            std::string msg = p.failure;
            for (char& ch : msg) {
                if (ch == '\n' || ch == ',') ch = ' ';
            }
            failures += std::string(buf) + "," + msg + "\n";
            log << "sweep: nu = " << p.nu << " failed: " << p.failure << "\n";
        }
    }
    write_file(fs::path(c.out) / "diagnostics.csv", diagnostics_csv(rows));
    write_file(fs::path(c.out) / "failures.csv", failures);
    write_manifest(c, {"diagnostics.csv", "failures.csv"});
    log << "sweep: " << points.size() - failed << "/" << points.size() << " points succeeded\n";
    return failed == static_cast<int>(points.size()) ? 1 : 0;
}

int cmd_verify(const RunConfig& c, std::ostream& log) {
    std::vector<std::string> ids = c.verify.lemmas.empty() ? lemma_ids() : c.verify.lemmas;
    const auto& r = c.verify.ranges;
    const Eigenbasis basis(r.n_max + 1, r.k_max);
    std::vector<LemmaReport> reports;
    bool ok = true;
    for (const auto& id : ids) {
        reports.push_back(verify_lemma(id, r, &basis));
        const LemmaReport& rep = reports.back();
        if (rep.envelope) {
            log << id << ": envelope C = " << rep.empirical_constant.value_or(0.0);
            if (rep.slope) log << ", slope = " << *rep.slope;
            log << " (" << rep.range << ")\n";
        } else {
            log << id << ": " << (rep.pass ? "pass" : "FAIL") << ", worst margin " << rep.worst_margin
                << " at n = " << rep.worst_n << ", k = " << rep.worst_k << " (" << rep.range << ")\n";
            ok = ok && rep.pass;
        }
    }
    write_file(fs::path(c.out) / "lemmas.csv", lemma_csv(reports));
    write_file(fs::path(c.out) / "lemma_summary.csv", lemma_summary_csv(reports));
    write_manifest(c, {"lemmas.csv", "lemma_summary.csv"});
    return ok ? 0 : 1;
}

} // namespace

std::vector<SweepPoint> run_sweep(const RunConfig& c, const Eigenbasis& basis) {
    const auto& nus = c.sweep.nus;
    std::vector<SweepPoint> points(nus.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (int i = 0; i < static_cast<int>(nus.size()); ++i) {
        SweepPoint& p = points[static_cast<std::size_t>(i)];
        p.nu = nus[static_cast<std::size_t>(i)];
        try {
            const SimTrace trace = simulate(sim_config(c, p.nu), basis);
            if (trace.aborted) throw InstabilityError(trace.failure);
            p.rows = evaluate_kinds(c, basis, trace, c.sweep.kinds);
        } catch (const std::exception& e) {
            p.failure = e.what();
            p.rows.clear();
            for (const auto& k : c.sweep.kinds) {
                DiagnosticsRow r;
                r.nu = p.nu;
                r.kind = k;
                r.value = std::numeric_limits<double>::quiet_NaN();
                r.L = c.schedule.L(p.nu);
                r.M = c.schedule.M(p.nu);
                r.delta = c.schedule.delta(p.nu);
                r.c = c.schedule.c;
                p.rows.push_back(r);
            }
        }
    }
    return points;
}

int run(const RunConfig& c, std::ostream& log) {
    validate(c);
    if (c.threads > 0) omp_set_num_threads(c.threads);
    fs::create_directories(c.out);
    if (c.command == "zeros") return cmd_zeros(c, log);
    if (c.command == "basis") return cmd_basis(c, log);
    if (c.command == "simulate") return cmd_simulate(c, log);
    if (c.command == "sweep") return cmd_sweep(c, log);
    return cmd_verify(c, log);
}

} // namespace vvdisk::cli
