// chad: biokinetic digester engine with a particle-field front end.
//
// Subcommands: run-cstr, run-field, compare, bench, convert, gen-snapshots,
// dump-config. Exit codes: 0 ok, 2 config, 3 io, 4 parse, 5 solver.

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "chad/bench.hpp"
#include "chad/config.hpp"
#include "chad/csv.hpp"
#include "chad/field.hpp"
#include "chad/reactor.hpp"
#include "chad/snapshot.hpp"

namespace fs = std::filesystem;
using namespace chad;

namespace {

double now_between(const std::chrono::steady_clock::time_point& a,
                   const std::chrono::steady_clock::time_point& b) {
    return std::chrono::duration<double>(b - a).count();
}

int env_workers(int fallback) {
    if (const char* w = std::getenv("CHAD_WORKERS")) {
        char* end = nullptr;
        const long v = std::strtol(w, &end, 10);
        if (end && *end == '\0' && v >= 1) return static_cast<int>(v);
        throw ConfigError("CHAD_WORKERS must be a positive integer, got '" + std::string(w) + "'");
    }
    return fallback;
}

std::vector<std::string> split_csv(const std::string& text) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = text.find(',', pos);
        const std::size_t end = comma == std::string::npos ? text.size() : comma;
        out.push_back(text.substr(pos, end - pos));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

ParamSet load_params(const RunConfig& cfg) {
    return cfg.params_file.empty() ? ParamSet::defaults() : ParamSet::load(cfg.params_file);
}

AdmState load_influent(const RunConfig& cfg) {
    return cfg.influent_file.empty() ? default_influent() : load_state_file(cfg.influent_file);
}

AdmState load_initial(const RunConfig& cfg) {
    return cfg.initial_file.empty() ? default_initial_state() : load_state_file(cfg.initial_file);
}

// Common flags shared by run-cstr and run-field.
struct CommonOpts {
    std::string preset_name = "case1";
    std::string config_file;
    std::string params_file, influent_file, initial_file, out_dir;
    std::string scheme, mode;
    double dt = -1.0;
    int workers = -1;
};

void add_common(CLI::App* cmd, CommonOpts& o, const std::string& default_preset) {
    o.preset_name = default_preset;
    cmd->add_option("--preset", o.preset_name, "case preset: case1 | case2");
    cmd->add_option("--config", o.config_file, "sectioned key=value config file");
    cmd->add_option("--params", o.params_file, "kinetic parameter file");
    cmd->add_option("--influent", o.influent_file, "inflow composition file");
    cmd->add_option("--initial", o.initial_file, "initial state file");
    cmd->add_option("--out", o.out_dir, "output directory");
    cmd->add_option("--scheme", o.scheme, "fixed-euler | fixed-rk4-oracle");
    cmd->add_option("--mode", o.mode, "algebraic mode: dae | de");
    cmd->add_option("--dt", o.dt, "inner step size in seconds");
    cmd->add_option("--workers", o.workers, "worker threads (or env CHAD_WORKERS)");
}

RunConfig resolve_config(const CommonOpts& o) {
    RunConfig cfg = preset(o.preset_name);
    if (!o.config_file.empty()) cfg = apply_config_file(cfg, o.config_file);
    if (!o.params_file.empty()) cfg.params_file = o.params_file;
    if (!o.influent_file.empty()) cfg.influent_file = o.influent_file;
    if (!o.initial_file.empty()) cfg.initial_file = o.initial_file;
    if (!o.out_dir.empty()) cfg.output_dir = o.out_dir;
    if (!o.scheme.empty()) cfg.integrator.scheme = scheme_from_name(o.scheme);
    if (!o.mode.empty()) cfg.integrator.mode = mode_from_name(o.mode);
    if (o.dt > 0.0) cfg.integrator.dt_seconds = o.dt;
    cfg.workers = o.workers > 0 ? o.workers : env_workers(cfg.workers);
    return cfg;
}

void print_state_summary(const AdmState& s, double q_gas) {
    std::printf("  pH          %10.4f\n", s.ph());
    std::printf("  q_gas       %10.3f m3/d\n", q_gas);
    for (Component c : {S_su, S_ac, S_h2, S_ch4, S_IC, S_IN, X_c, X_ch, S_gas_ch4, S_gas_co2})
        std::printf("  %-11s %13.6e\n", std::string(component_name(c)).c_str(), s[c]);
}

int cmd_run_cstr(const CommonOpts& o, double duration_override, double output_every_override) {
    RunConfig cfg = resolve_config(o);
    cfg.kind = RunConfig::Kind::cstr;
    if (duration_override >= 0.0) cfg.duration_days = duration_override;
    if (output_every_override > 0.0) cfg.output_every_days = output_every_override;
    cfg.validate();

    cfg.reactor.inflow = load_influent(cfg);
    const AdmParams params = make_params(load_params(cfg), cfg.reactor);
    const AdmState initial = load_initial(cfg);

    const double dt_d = seconds_to_days(cfg.integrator.dt_seconds);
    const long stride = std::max<long>(1, std::llround(cfg.output_every_days / dt_d));

    fs::create_directories(cfg.output_dir);
    const fs::path out_csv = fs::path(cfg.output_dir) / "trajectory.csv";

    RunStats stats;
    const auto t0 = std::chrono::steady_clock::now();
    const Trajectory traj =
        run(cfg.reactor, params, initial, cfg.duration_days, cfg.integrator, stride, &stats);
    const auto t1 = std::chrono::steady_clock::now();
    write_trajectory_csv(traj, out_csv);

    std::printf("run-cstr: %s, %.17g d, dt = %.17g s, scheme = %s, mode = %s\n",
                o.preset_name.c_str(), cfg.duration_days, cfg.integrator.dt_seconds,
                scheme_name(cfg.integrator.scheme).c_str(),
                mode_name(cfg.integrator.mode).c_str());
    std::printf("  steps %ld, wall %.2f s, rows %zu -> %s\n", stats.steps.steps,
                now_between(t0, t1), traj.rows(), out_csv.string().c_str());
    std::printf("  max charge-balance residual %.3e, tiny-negative clamps %ld\n",
                stats.steps.max_proton_residual, stats.steps.clamped);
    std::printf("final state:\n");
    print_state_summary(traj.states.back(), traj.q_gas.back());
    const double stationarity =
        scaled_rhs_norm(traj.states.back(), cfg.reactor, params, cfg.integrator.mode);
    std::printf("  stationarity max|dS/dt|/|S| = %.3e 1/d %s\n", stationarity,
                stationarity < 1e-6 ? "(steady)" : "(transient)");
    return kExitOk;
}

std::vector<fs::path> sorted_snapshot_files(const std::string& dir) {
    if (!fs::is_directory(dir)) throw IoError("snapshot directory not found: " + dir);
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(dir)) {
        if (!e.is_regular_file()) continue;
        const auto ext = e.path().extension().string();
        if (ext == ".bin" || ext == ".csv" || ext == ".txt") files.push_back(e.path());
    }
    std::sort(files.begin(), files.end());
    if (files.empty()) throw IoError("no snapshot files (*.bin, *.csv, *.txt) in " + dir);
    return files;
}

ParticleSnapshot load_snapshot_any(const fs::path& p) {
    return p.extension() == ".bin" ? load_snapshot_binary(p) : load_snapshot_ascii(p);
}

int cmd_run_field(const CommonOpts& o, const std::string& snapshots, double outer_dt, int substeps,
                  const std::string& export_component, double export_every,
                  const std::string& export_format, double v_tank) {
    RunConfig cfg = resolve_config(o);
    cfg.kind = RunConfig::Kind::field;
    if (!snapshots.empty()) cfg.snapshot_dir = snapshots;
    if (outer_dt > 0.0) cfg.policy.outer_dt_s = outer_dt;
    if (substeps > 0) cfg.policy.inner_substeps = substeps;
    if (!export_component.empty()) cfg.export_component = export_component;
    if (export_every > 0.0) cfg.export_every_seconds = export_every;
    if (!export_format.empty()) cfg.export_format = export_format;
    if (v_tank > 0.0) cfg.reactor.v_liq = v_tank;
    cfg.integrator.substeps_per_outer = cfg.policy.inner_substeps;
    cfg.integrator.dt_seconds = cfg.policy.outer_dt_s / cfg.policy.inner_substeps;
    cfg.validate();
    if (cfg.snapshot_dir.empty()) throw ConfigError("run-field requires --snapshots DIR");

    const auto files = sorted_snapshot_files(cfg.snapshot_dir);
    const auto params =
        std::make_shared<const AdmParams>(make_params(load_params(cfg), cfg.reactor));
    const Component comp = *component_from_name(cfg.export_component);

    fs::create_directories(cfg.output_dir);
    const auto t0 = std::chrono::steady_clock::now();
    double io_seconds = 0.0;

    auto t_io0 = std::chrono::steady_clock::now();
    ParticleSnapshot snap = load_snapshot_any(files[0]);
    io_seconds += now_between(t_io0, std::chrono::steady_clock::now());

    FieldState field =
        init_field(snap, cfg.reactor.v_liq, load_initial(cfg), params, cfg.integrator);
    std::printf("run-field: %zu particles, tank %.6g m3, particle volume %.6g m3\n", field.size(),
                field.v_tank, field.particle_volume);
    std::printf("  outer_dt %.17g s x %d substeps, %zu snapshots, workers %d\n",
                cfg.policy.outer_dt_s, cfg.policy.inner_substeps, files.size(), cfg.workers);

    auto export_now = [&](long step_idx) {
        char name[64];
        std::snprintf(name, sizeof(name), "field_%06ld.%s", step_idx,
                      cfg.export_format == "binary" ? "bin" : "csv");
        const fs::path out = fs::path(cfg.output_dir) / name;
        if (cfg.export_format == "binary")
            export_field_binary(field, comp, out);
        else
            export_field_csv(field, comp, out);
    };

    WorkerPool pool(cfg.workers);
    StepStats stats;
    const long export_stride =
        std::max<long>(1, std::llround(cfg.export_every_seconds / cfg.policy.outer_dt_s));
    export_now(0);
    long steps_taken = 0;
    for (std::size_t i = 1; i < files.size(); ++i) {
        t_io0 = std::chrono::steady_clock::now();
        try {
            snap = load_snapshot_any(files[i]);
        } catch (const ParseError&) {
            std::fprintf(stderr, "while reading snapshot %s\n", files[i].string().c_str());
            throw;
        }
        io_seconds += now_between(t_io0, std::chrono::steady_clock::now());
        try {
            advance(field, snap, cfg.policy, pool, cfg.integrator, &stats);
        } catch (const ConfigError& e) {
            throw ConfigError("snapshot " + files[i].string() + ": " + e.what());
        }
        ++steps_taken;
        if (steps_taken % export_stride == 0) export_now(steps_taken);
    }
    if (steps_taken % export_stride != 0) export_now(steps_taken);
    const auto t1 = std::chrono::steady_clock::now();

    std::printf("  advanced %ld outer steps to t = %.17g s\n", steps_taken, field.time_s);
    std::printf("  wall %.2f s total, %.2f s snapshot IO, %ld inner steps\n", now_between(t0, t1),
                io_seconds, stats.steps);
    std::printf("  max charge-balance residual %.3e, clamps %ld\n", stats.max_proton_residual,
                stats.clamped);
    double vmin = 1e300, vmax = -1e300;
    for (const AdmState& s : field.states) {
        vmin = std::min(vmin, s[comp]);
        vmax = std::max(vmax, s[comp]);
    }
    std::printf("  %s across particles: min %.9e max %.9e spread %.3e\n",
                cfg.export_component.c_str(), vmin, vmax, vmax - vmin);
    return kExitOk;
}

int cmd_compare(const std::string& candidate, const std::string& reference,
                const std::string& components, const std::string& out_file) {
    const CsvTable cand = read_csv(candidate);
    const CsvTable ref = read_csv(reference);
    if (cand.rows() != ref.rows())
        throw ConfigError("compare: row count mismatch (" + std::to_string(cand.rows()) + " vs " +
                          std::to_string(ref.rows()) + ")");
    const auto& tc = cand.column("time_d");
    const auto& tr = ref.column("time_d");
    for (std::size_t i = 0; i < tc.size(); ++i)
        if (std::abs(tc[i] - tr[i]) > 1e-9)
            throw ConfigError("compare: time grids differ at row " + std::to_string(i));

    std::vector<std::string> names = split_csv(
        components.empty() ? "X_c,X_ch,S_su,S_bu,S_ac,S_ch4,G_ch4,pH" : components);

    std::ofstream out;
    if (!out_file.empty()) {
        out.open(out_file);
        if (!out) throw IoError("cannot open for writing: " + out_file);
        out << "component,relative_rmse_percent\n";
    }
    std::printf("%-12s %s\n", "component", "relative RMSE (%)");
    for (const std::string& raw : names) {
        std::string col = raw;
        if (raw != "pH" && !cand.has_column(raw)) {
            const auto c = component_from_name(raw);
            if (!c) throw ConfigError("compare: unknown component '" + raw + "'");
            col = std::string(component_name(*c));
        }
        if (!cand.has_column(col) || !ref.has_column(col))
            throw ConfigError("compare: column '" + col + "' missing from input");
        const double rmse = relative_rmse(cand.column(col), ref.column(col));
        std::printf("%-12s %.6g\n", raw.c_str(), rmse);
        if (out.is_open()) out << raw << ',' << format_g17(rmse) << "\n";
    }
    return kExitOk;
}

int cmd_bench(const std::string& n_list_s, const std::string& w_list_s, int reps,
              const std::string& out_file, double outer_dt, int substeps) {
    std::vector<std::size_t> n_list;
    for (const auto& s : split_csv(n_list_s)) n_list.push_back(std::stoull(s));
    std::vector<int> w_list;
    for (const auto& s : split_csv(w_list_s)) w_list.push_back(std::stoi(s));

    BenchWorkload wl = default_bench_workload();
    if (outer_dt > 0.0) wl.policy.outer_dt_s = outer_dt;
    if (substeps > 0) wl.policy.inner_substeps = substeps;
    wl.integrator.dt_seconds = wl.policy.outer_dt_s / wl.policy.inner_substeps;

    std::printf("bench: one outer step of %.17g s with %d substeps, %d repetitions\n",
                wl.policy.outer_dt_s, wl.policy.inner_substeps, reps);
    const BenchReport report = bench_scaling(n_list, w_list, reps, wl);

    std::printf("%12s %8s %16s %12s %9s\n", "n_particles", "workers", "mean_runtime_s",
                "stddev_s", "speedup");
    for (const BenchCell& c : report.cells)
        std::printf("%12zu %8d %16.6f %12.6f %9.3f\n", c.n_particles, c.workers,
                    c.mean_runtime_s, c.stddev_s, c.speedup);

    // runtime-vs-N linearity per worker count, when the sweep allows it
    for (int w : w_list) {
        std::vector<double> xs, ys;
        for (const BenchCell& c : report.cells)
            if (c.workers == w) {
                xs.push_back(static_cast<double>(c.n_particles));
                ys.push_back(c.mean_runtime_s);
            }
        if (xs.size() >= 2)
            std::printf("linearity W=%d: runtime-vs-N R^2 = %.6f over %zu sizes\n", w,
                        linear_fit_r2(xs, ys), xs.size());
    }
    if (!out_file.empty()) {
        write_bench_csv(report, out_file);
        std::printf("report -> %s\n", out_file.c_str());
    }
    return kExitOk;
}

int cmd_convert(const std::string& in, const std::string& out, bool to_ascii) {
    auto convert_one = [&](const fs::path& src, const fs::path& dst) {
        const auto t0 = std::chrono::steady_clock::now();
        const ParticleSnapshot snap = load_snapshot_any(src);
        const auto t1 = std::chrono::steady_clock::now();
        if (to_ascii)
            write_snapshot_ascii(snap, dst);
        else
            write_snapshot_binary(snap, dst);
        const auto t2 = std::chrono::steady_clock::now();
        std::printf("%s -> %s: %zu particles, read %.3f s, write %.3f s\n", src.string().c_str(),
                    dst.string().c_str(), snap.particles.size(), now_between(t0, t1),
                    now_between(t1, t2));
    };

    const std::string ext = to_ascii ? ".csv" : ".bin";
    if (fs::is_directory(in)) {
        fs::create_directories(out);
        for (const auto& f : sorted_snapshot_files(in))
            convert_one(f, fs::path(out) / (f.stem().string() + ext));
    } else {
        if (!fs::exists(in)) throw IoError("input not found: " + in);
        fs::path dst = out.empty() ? fs::path(in).replace_extension(ext) : fs::path(out);
        convert_one(in, dst);
    }
    return kExitOk;
}

int cmd_gen_snapshots(const std::string& out_dir, std::size_t n, long steps, double outer_dt,
                      std::uint64_t seed, double radius, double height, double rpm,
                      const std::string& format) {
    if (format != "ascii" && format != "binary")
        throw ConfigError("gen-snapshots: format must be ascii or binary");
    SnapshotGenConfig cfg;
    cfg.n = n;
    cfg.outer_dt_s = outer_dt;
    cfg.seed = seed;
    cfg.radius_m = radius;
    cfg.height_m = height;
    cfg.rpm = rpm;
    fs::create_directories(out_dir);
    for (long k = 0; k <= steps; ++k) {
        const ParticleSnapshot snap = generate_snapshot(cfg, k);
        char name[64];
        std::snprintf(name, sizeof(name), "snap_%06ld.%s", k,
                      format == "binary" ? "bin" : "csv");
        const fs::path p = fs::path(out_dir) / name;
        if (format == "binary")
            write_snapshot_binary(snap, p);
        else
            write_snapshot_ascii(snap, p);
    }
    std::printf("gen-snapshots: wrote %ld snapshots of %zu particles to %s\n", steps + 1, n,
                out_dir.c_str());
    return kExitOk;
}

int cmd_dump_config(const std::string& preset_name, const std::string& out_dir) {
    const RunConfig cfg = preset(preset_name);
    if (out_dir.empty()) {
        dump_run_config(cfg, std::cout);
        std::cout << "\n# ---- embedded kinetic parameter set ----\n";
        ParamSet::defaults().dump(std::cout);
        return kExitOk;
    }
    fs::create_directories(out_dir);
    {
        std::ofstream f(fs::path(out_dir) / "run.conf");
        dump_run_config(cfg, f);
    }
    {
        std::ofstream f(fs::path(out_dir) / "params.conf");
        ParamSet::defaults().dump(f);
    }
    {
        std::ofstream f(fs::path(out_dir) / "influent.conf");
        dump_state(default_influent(), f);
    }
    {
        std::ofstream f(fs::path(out_dir) / "initial.conf");
        dump_state(default_initial_state(), f);
    }
    std::printf("dump-config: wrote run.conf, params.conf, influent.conf, initial.conf to %s\n",
                out_dir.c_str());
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"coupled flow-particle digester biokinetics engine"};
    app.require_subcommand(1);

    // run-cstr
    CommonOpts cstr_opts;
    double duration_days = -1.0, output_every = -1.0;
    auto* sc_cstr = app.add_subcommand("run-cstr", "single stirred-tank run");
    add_common(sc_cstr, cstr_opts, "case1");
    sc_cstr->add_option("--duration", duration_days, "duration in days");
    sc_cstr->add_option("--output-every", output_every, "recording cadence in days");

    // run-field
    CommonOpts field_opts;
    std::string snapshots, export_component, export_format;
    double outer_dt = -1.0, export_every = -1.0, v_tank = -1.0;
    int substeps = -1;
    auto* sc_field = app.add_subcommand("run-field", "particle-field run from snapshots");
    add_common(sc_field, field_opts, "case2");
    sc_field->add_option("--snapshots", snapshots, "directory of snapshot files");
    sc_field->add_option("--outer-dt", outer_dt, "snapshot cadence in seconds");
    sc_field->add_option("--substeps", substeps, "inner biokinetic substeps per outer step");
    sc_field->add_option("--export-component", export_component, "state column to export");
    sc_field->add_option("--export-every", export_every, "export cadence in seconds");
    sc_field->add_option("--export-format", export_format, "csv | binary");
    sc_field->add_option("--v-tank", v_tank, "tank volume in m3");

    // compare
    std::string cand, ref, components, compare_out;
    auto* sc_cmp = app.add_subcommand("compare", "relative RMSE between two trajectory CSVs");
    sc_cmp->add_option("--candidate", cand)->required();
    sc_cmp->add_option("--reference", ref)->required();
    sc_cmp->add_option("--components", components, "comma list (default: the benchmark table)");
    sc_cmp->add_option("--out", compare_out, "write the table as CSV");

    // bench
    std::string n_list = "110929", w_list = "1,2,4,8", bench_out;
    int reps = 10, bench_substeps = -1;
    double bench_outer_dt = -1.0;
    auto* sc_bench = app.add_subcommand("bench", "kernel-only scaling benchmark");
    sc_bench->add_option("--n-list", n_list, "comma list of particle counts");
    sc_bench->add_option("--w-list", w_list, "comma list of worker counts");
    sc_bench->add_option("--reps", reps, "repetitions per cell");
    sc_bench->add_option("--out", bench_out, "report CSV path");
    sc_bench->add_option("--outer-dt", bench_outer_dt, "outer step in seconds");
    sc_bench->add_option("--substeps", bench_substeps, "substeps per outer step");

    // convert
    std::string conv_in, conv_out;
    bool to_ascii = false;
    auto* sc_conv = app.add_subcommand("convert", "snapshot codec conversion with timings");
    sc_conv->add_option("--in", conv_in)->required();
    sc_conv->add_option("--out", conv_out, "output file or directory");
    sc_conv->add_flag("--to-ascii", to_ascii, "convert to ascii (default: to binary)");

    // gen-snapshots
    std::string gen_out = "snapshots", gen_format = "binary";
    std::size_t gen_n = 1000;
    long gen_steps = 400;
    double gen_dt = 0.5, gen_radius = 0.1, gen_height = 0.25, gen_rpm = 12.0;
    std::uint64_t gen_seed = 42;
    auto* sc_gen = app.add_subcommand("gen-snapshots", "synthetic rotating-cylinder snapshots");
    sc_gen->add_option("--out", gen_out, "output directory");
    sc_gen->add_option("--n", gen_n, "particles per snapshot");
    sc_gen->add_option("--steps", gen_steps, "number of outer steps (steps+1 files)");
    sc_gen->add_option("--outer-dt", gen_dt, "snapshot cadence in seconds");
    sc_gen->add_option("--seed", gen_seed, "generator seed");
    sc_gen->add_option("--radius", gen_radius, "cylinder radius in m");
    sc_gen->add_option("--height", gen_height, "cylinder height in m");
    sc_gen->add_option("--rpm", gen_rpm, "rigid rotation speed");
    sc_gen->add_option("--format", gen_format, "ascii | binary");

    // dump-config
    std::string dump_preset = "case1", dump_out;
    auto* sc_dump = app.add_subcommand("dump-config", "print or write the embedded defaults");
    sc_dump->add_option("--preset", dump_preset, "case1 | case2");
    sc_dump->add_option("--out-dir", dump_out, "write files instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    try {
        if (sc_cstr->parsed()) return cmd_run_cstr(cstr_opts, duration_days, output_every);
        if (sc_field->parsed())
            return cmd_run_field(field_opts, snapshots, outer_dt, substeps, export_component,
                                 export_every, export_format, v_tank);
        if (sc_cmp->parsed()) return cmd_compare(cand, ref, components, compare_out);
        if (sc_bench->parsed())
            return cmd_bench(n_list, w_list, reps, bench_out, bench_outer_dt, bench_substeps);
        if (sc_conv->parsed()) return cmd_convert(conv_in, conv_out, to_ascii);
        if (sc_gen->parsed())
            return cmd_gen_snapshots(gen_out, gen_n, gen_steps, gen_dt, gen_seed, gen_radius,
                                     gen_height, gen_rpm, gen_format);
        if (sc_dump->parsed()) return cmd_dump_config(dump_preset, dump_out);
    } catch (const ParseError& e) {
        std::fprintf(stderr, "parse error: %s\n", e.what());
        return kExitParse;
    } catch (const IoError& e) {
        std::fprintf(stderr, "io error: %s\n", e.what());
        return kExitIo;
    } catch (const SolverError& e) {
        std::fprintf(stderr, "solver failure: %s\n", e.what());
        return kExitSolver;
    } catch (const AggregateItemError& e) {
        std::fprintf(stderr, "solver failure: %s\n", e.what());
        return kExitSolver;
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return kExitConfig;
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return kExitConfig;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "internal error: %s\n", e.what());
        return kExitInternal;
    }
    return kExitOk;
}
