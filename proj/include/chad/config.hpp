#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "chad/field.hpp"
#include "chad/integrator.hpp"
#include "chad/reactor.hpp"

namespace chad {

/// Everything one invocation needs: case kind, file locations, reactor and
/// solver settings. Values come from a preset, then an optional config
/// file, then command-line flags (later wins).
struct RunConfig {
    enum class Kind { cstr, field };
    Kind kind = Kind::cstr;

    std::string params_file;   // empty = embedded defaults
    std::string influent_file; // empty = embedded default influent
    std::string initial_file;  // empty = embedded default initial state
    std::string snapshot_dir;
    std::string output_dir = "out";

    ReactorConfig reactor;

    double duration_days = 60.0;     // cstr case
    double output_every_days = 0.01; // trajectory recording cadence

    SyncPolicy policy;                      // field case
    double duration_seconds = 200.0;        // field case
    double export_every_seconds = 50.0;     // field export cadence
    std::string export_component = "S_ch4";
    std::string export_format = "csv"; // csv | binary

    IntegratorConfig integrator;
    int workers = 1;

    void validate() const;
};

/// Table-backed presets of the two verification cases.
///   case1: 3400 m3 digester, 300 m3 headspace, 178.45 m3/d feed,
///          308.5 K, 1.013 bar, 60 d.
///   case2: 8e-3 m3 closed lab tank, 200 s, outer step 0.5 s with 10
///          substeps, 308.5 K.
RunConfig preset(const std::string& name);

/// Preset (or current values) overridden by a sectioned key=value file.
RunConfig apply_config_file(RunConfig base, const std::filesystem::path& file);

void dump_run_config(const RunConfig& cfg, std::ostream& os);
std::string dump_run_config_string(const RunConfig& cfg);

// flag-value helpers shared by the CLI
Scheme scheme_from_name(const std::string& name);
std::string scheme_name(Scheme s);
AlgebraicMode mode_from_name(const std::string& name);
std::string mode_name(AlgebraicMode m);
NewtonConfig::Guess guess_from_name(const std::string& name);
std::string guess_name(NewtonConfig::Guess g);

} // namespace chad
