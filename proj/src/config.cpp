#include "chad/config.hpp"

#include <ostream>
#include <sstream>

#include "chad/csv.hpp"
#include "chad/settings.hpp"

namespace chad {

Scheme scheme_from_name(const std::string& name) {
    if (name == "fixed-euler") return Scheme::fixed_euler;
    if (name == "fixed-rk4-oracle") return Scheme::fixed_rk4_oracle;
    throw ConfigError("unknown scheme '" + name + "' (fixed-euler | fixed-rk4-oracle)");
}

std::string scheme_name(Scheme s) {
    return s == Scheme::fixed_euler ? "fixed-euler" : "fixed-rk4-oracle";
}

AlgebraicMode mode_from_name(const std::string& name) {
    if (name == "dae") return AlgebraicMode::dae;
    if (name == "de") return AlgebraicMode::de;
    throw ConfigError("unknown algebraic mode '" + name + "' (dae | de)");
}

std::string mode_name(AlgebraicMode m) { return m == AlgebraicMode::dae ? "dae" : "de"; }

NewtonConfig::Guess guess_from_name(const std::string& name) {
    if (name == "previous-value") return NewtonConfig::Guess::previous_value;
    if (name == "neutral-ph") return NewtonConfig::Guess::neutral_ph;
    if (name == "midpoint") return NewtonConfig::Guess::midpoint;
    throw ConfigError("unknown initial guess policy '" + name +
                      "' (previous-value | neutral-ph | midpoint)");
}

std::string guess_name(NewtonConfig::Guess g) {
    switch (g) {
    case NewtonConfig::Guess::previous_value:
        return "previous-value";
    case NewtonConfig::Guess::neutral_ph:
        return "neutral-ph";
    case NewtonConfig::Guess::midpoint:
        return "midpoint";
    }
    return "previous-value";
}

void RunConfig::validate() const {
    reactor.validate();
    policy.validate();
    if (duration_days < 0.0 || duration_seconds < 0.0)
        throw ConfigError("config: durations must be >= 0");
    if (!(output_every_days > 0.0)) throw ConfigError("config: output_every_days must be > 0");
    if (!(export_every_seconds > 0.0))
        throw ConfigError("config: export_every_seconds must be > 0");
    if (!(integrator.dt_seconds > 0.0)) throw ConfigError("config: dt must be > 0");
    if (integrator.substeps_per_outer < 1)
        throw ConfigError("config: substeps_per_outer must be >= 1");
    if (workers < 1) throw ConfigError("config: workers must be >= 1");
    if (export_format != "csv" && export_format != "binary")
        throw ConfigError("config: export_format must be 'csv' or 'binary'");
    if (!component_from_name(export_component))
        throw ConfigError("config: unknown export component '" + export_component + "'");
    if (integrator.newton.max_iterations < 1)
        throw ConfigError("config: newton max_iterations must be >= 1");
    if (!(integrator.newton.absolute_tolerance > 0.0) ||
        !(integrator.newton.relative_tolerance > 0.0))
        throw ConfigError("config: newton tolerances must be > 0");
}

RunConfig preset(const std::string& name) {
    RunConfig c;
    if (name == "case1") {
        c.kind = RunConfig::Kind::cstr;
        c.reactor.v_liq = 3400.0;
        c.reactor.v_gas = 300.0;
        c.reactor.q_in = 178.45;
        c.reactor.q_out = 178.45;
        c.reactor.temperature_k = 308.5;
        c.reactor.pressure_bar = 1.013;
        c.reactor.inflow = default_influent();
        c.duration_days = 60.0;
        c.output_every_days = 0.01;
        c.integrator.dt_seconds = 0.05;
    } else if (name == "case2") {
        c.kind = RunConfig::Kind::field;
        c.reactor.v_liq = 8.0e-3;
        // headspace volume is not part of the published lab-tank data; the
        // default keeps the benchmark digester's liquid:gas ratio
        c.reactor.v_gas = 8.0e-3 * (300.0 / 3400.0);
        c.reactor.q_in = 0.0;
        c.reactor.q_out = 0.0;
        c.reactor.temperature_k = 308.5;
        c.reactor.pressure_bar = 1.013;
        c.reactor.inflow = AdmState{};
        c.duration_seconds = 200.0;
        c.policy = SyncPolicy{0.5, 10};
        c.integrator.dt_seconds = 0.05;
        c.integrator.substeps_per_outer = 10;
    } else {
        throw ConfigError("unknown preset '" + name + "' (case1 | case2)");
    }
    return c;
}

RunConfig apply_config_file(RunConfig c, const std::filesystem::path& file) {
    const SettingsFile f = SettingsFile::parse_file(file);

    if (f.has("run.kind")) {
        const std::string k = f.str("run.kind");
        if (k == "cstr")
            c.kind = RunConfig::Kind::cstr;
        else if (k == "field")
            c.kind = RunConfig::Kind::field;
        else
            throw ParseError(f.name(), f.line_of("run.kind"), "run.kind must be cstr or field");
    }

    c.params_file = f.str_or("paths.params", c.params_file);
    c.influent_file = f.str_or("paths.influent", c.influent_file);
    c.initial_file = f.str_or("paths.initial", c.initial_file);
    c.snapshot_dir = f.str_or("paths.snapshots", c.snapshot_dir);
    c.output_dir = f.str_or("paths.output", c.output_dir);

    c.reactor.v_liq = f.number_or("reactor.v_liq_m3", c.reactor.v_liq);
    c.reactor.v_gas = f.number_or("reactor.v_gas_m3", c.reactor.v_gas);
    c.reactor.q_in = f.number_or("reactor.q_in_m3_d", c.reactor.q_in);
    c.reactor.q_out = f.number_or("reactor.q_out_m3_d", c.reactor.q_out);
    c.reactor.temperature_k = f.number_or("reactor.temperature_k", c.reactor.temperature_k);
    c.reactor.pressure_bar = f.number_or("reactor.pressure_bar", c.reactor.pressure_bar);

    if (f.has("solver.scheme")) c.integrator.scheme = scheme_from_name(f.str("solver.scheme"));
    c.integrator.dt_seconds = f.number_or("solver.dt_inner_s", c.integrator.dt_seconds);
    if (f.has("solver.algebraic_mode"))
        c.integrator.mode = mode_from_name(f.str("solver.algebraic_mode"));
    c.integrator.newton.max_iterations = static_cast<int>(
        f.integer_or("solver.max_iterations", c.integrator.newton.max_iterations));
    c.integrator.newton.absolute_tolerance =
        f.number_or("solver.absolute_tolerance", c.integrator.newton.absolute_tolerance);
    c.integrator.newton.relative_tolerance =
        f.number_or("solver.relative_tolerance", c.integrator.newton.relative_tolerance);
    if (f.has("solver.initial_guess"))
        c.integrator.newton.initial_guess = guess_from_name(f.str("solver.initial_guess"));

    c.duration_days = f.number_or("cstr.duration_days", c.duration_days);
    c.output_every_days = f.number_or("cstr.output_every_days", c.output_every_days);

    c.policy.outer_dt_s = f.number_or("field.outer_dt_s", c.policy.outer_dt_s);
    c.policy.inner_substeps =
        static_cast<int>(f.integer_or("field.inner_substeps", c.policy.inner_substeps));
    c.duration_seconds = f.number_or("field.duration_seconds", c.duration_seconds);
    c.export_every_seconds = f.number_or("field.export_every_s", c.export_every_seconds);
    c.export_component = f.str_or("field.export_component", c.export_component);
    c.export_format = f.str_or("field.export_format", c.export_format);

    c.workers = static_cast<int>(f.integer_or("parallel.workers", c.workers));

    static const char* known[] = {
        "run.kind", "paths.params", "paths.influent", "paths.initial", "paths.snapshots",
        "paths.output", "reactor.v_liq_m3", "reactor.v_gas_m3", "reactor.q_in_m3_d",
        "reactor.q_out_m3_d", "reactor.temperature_k", "reactor.pressure_bar", "solver.scheme",
        "solver.dt_inner_s", "solver.algebraic_mode", "solver.max_iterations",
        "solver.absolute_tolerance", "solver.relative_tolerance", "solver.initial_guess",
        "cstr.duration_days", "cstr.output_every_days", "field.outer_dt_s",
        "field.inner_substeps", "field.duration_seconds", "field.export_every_s",
        "field.export_component", "field.export_format", "parallel.workers"};
    for (const auto& key : f.keys()) {
        bool ok = false;
        for (const char* k : known)
            if (key == k) ok = true;
        if (!ok) throw ParseError(f.name(), f.line_of(key), "unknown config key '" + key + "'");
    }
    return c;
}

void dump_run_config(const RunConfig& c, std::ostream& os) {
    auto g = [](double v) { return format_g17(v); };
    os << "[run]\n";
    os << "kind = " << (c.kind == RunConfig::Kind::cstr ? "cstr" : "field") << "\n\n";
    os << "[paths]\n";
    if (!c.params_file.empty()) os << "params = " << c.params_file << "\n";
    if (!c.influent_file.empty()) os << "influent = " << c.influent_file << "\n";
    if (!c.initial_file.empty()) os << "initial = " << c.initial_file << "\n";
    if (!c.snapshot_dir.empty()) os << "snapshots = " << c.snapshot_dir << "\n";
    os << "output = " << c.output_dir << "\n\n";
    os << "[reactor]\n";
    os << "v_liq_m3 = " << g(c.reactor.v_liq) << "\n";
    os << "v_gas_m3 = " << g(c.reactor.v_gas) << "\n";
    os << "q_in_m3_d = " << g(c.reactor.q_in) << "\n";
    os << "q_out_m3_d = " << g(c.reactor.q_out) << "\n";
    os << "temperature_k = " << g(c.reactor.temperature_k) << "\n";
    os << "pressure_bar = " << g(c.reactor.pressure_bar) << "\n\n";
    os << "[solver]\n";
    os << "scheme = " << scheme_name(c.integrator.scheme) << "\n";
    os << "dt_inner_s = " << g(c.integrator.dt_seconds) << "\n";
    os << "algebraic_mode = " << mode_name(c.integrator.mode) << "\n";
    os << "max_iterations = " << c.integrator.newton.max_iterations << "\n";
    os << "absolute_tolerance = " << g(c.integrator.newton.absolute_tolerance) << "\n";
    os << "relative_tolerance = " << g(c.integrator.newton.relative_tolerance) << "\n";
    os << "initial_guess = " << guess_name(c.integrator.newton.initial_guess) << "\n\n";
    os << "[cstr]\n";
    os << "duration_days = " << g(c.duration_days) << "\n";
    os << "output_every_days = " << g(c.output_every_days) << "\n\n";
    os << "[field]\n";
    os << "outer_dt_s = " << g(c.policy.outer_dt_s) << "\n";
    os << "inner_substeps = " << c.policy.inner_substeps << "\n";
    os << "duration_seconds = " << g(c.duration_seconds) << "\n";
    os << "export_every_s = " << g(c.export_every_seconds) << "\n";
    os << "export_component = " << c.export_component << "\n";
    os << "export_format = " << c.export_format << "\n\n";
    os << "[parallel]\n";
    os << "workers = " << c.workers << "\n";
}

std::string dump_run_config_string(const RunConfig& cfg) {
    std::ostringstream os;
    dump_run_config(cfg, os);
    return os.str();
}

} // namespace chad
