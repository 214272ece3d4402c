#pragma once

#include <string>
#include <vector>

#include "chad/integrator.hpp"
#include "chad/params.hpp"
#include "chad/state.hpp"

namespace chad {

/// One continuously stirred tank: constant liquid volume (q_in = q_out),
/// fixed temperature, gas headspace venting against atmospheric pressure.
struct ReactorConfig {
    double v_liq = 3400.0;        // m3
    double v_gas = 300.0;         // m3
    double q_in = 178.45;         // m3/d
    double q_out = 178.45;        // m3/d
    double temperature_k = 308.5; // K
    double pressure_bar = 1.013;  // bar
    AdmState inflow;              // liquid components only

    Operational operational() const { return {v_liq, v_gas, temperature_k, pressure_bar}; }
    void validate() const;
};

/// Runtime parameters synced to a reactor's operating conditions.
AdmParams make_params(const ParamSet& base, const ReactorConfig& cfg);

/// Recorded time series of one run. One state per recorded time; times are
/// strictly increasing.
struct Trajectory {
    std::vector<double> time_d;
    std::vector<AdmState> states;
    std::vector<double> ph;
    std::vector<double> q_gas; // m3/d

    std::size_t rows() const { return time_d.size(); }
    std::vector<double> series(Component c) const;
};

struct RunStats {
    StepStats steps;
};

/// Full constant-volume derivative at a consistent state (dilution +
/// reaction + headspace). Thin wrapper over eval_rhs with the reactor's
/// flow configuration.
Derivative cstr_rhs(const AdmState& s, const ReactorConfig& cfg, const AdmParams& p,
                    AlgebraicMode mode = AlgebraicMode::dae);

/// Integrate the reactor for `duration_days`, recording every
/// `output_stride` steps (the initial state is always recorded, the final
/// step as well). Deterministic for fixed inputs.
Trajectory run(const ReactorConfig& cfg, const AdmParams& params, const AdmState& initial,
               double duration_days, const IntegratorConfig& icfg, long output_stride,
               RunStats* stats = nullptr);

/// Integrate until the scaled derivative inf-norm drops below `tol`
/// (checked every `check_every_days`), or `max_days` elapse.
AdmState find_steady_state(const ReactorConfig& cfg, const AdmParams& params,
                           const AdmState& initial, const IntegratorConfig& icfg,
                           double max_days, double tol, double* achieved = nullptr);

/// max_i |dy_i| / max(|y_i|, floor) -- the stationarity measure used above.
double scaled_rhs_norm(const AdmState& s, const ReactorConfig& cfg, const AdmParams& p,
                       AlgebraicMode mode, double floor = 1.0e-6);

/// Relative root-mean-square error in percent:
///   100 * sqrt(mean((c_t - r_t)^2)) / sqrt(mean(r_t^2)).
/// Throws ConfigError when the reference series is identically zero, or on
/// grid mismatch (use the trajectory overloads).
double relative_rmse(const std::vector<double>& candidate, const std::vector<double>& reference);

/// Component / pH series comparison of two trajectories on identical grids
/// (times must match within 1e-9 days).
double relative_rmse(const Trajectory& candidate, const Trajectory& reference, Component c);
double relative_rmse_ph(const Trajectory& candidate, const Trajectory& reference);

} // namespace chad
