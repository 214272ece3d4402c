#include "chad/reactor.hpp"

#include <cmath>
#include <string>

namespace chad {

void ReactorConfig::validate() const {
    if (!(v_liq > 0.0)) throw ConfigError("reactor: v_liq must be > 0");
    if (!(v_gas > 0.0)) throw ConfigError("reactor: v_gas must be > 0");
    if (q_in < 0.0 || q_out < 0.0) throw ConfigError("reactor: flows must be >= 0");
    if (q_in != q_out)
        throw ConfigError("reactor: constant volume requires q_in == q_out");
    if (!(temperature_k > 0.0)) throw ConfigError("reactor: temperature must be > 0");
    if (!(pressure_bar > 0.0)) throw ConfigError("reactor: pressure must be > 0");
    if (inflow.worst_negative() < 0.0)
        throw ConfigError("reactor: inflow concentrations must be >= 0");
}

AdmParams make_params(const ParamSet& base, const ReactorConfig& cfg) {
    cfg.validate();
    return AdmParams::make(base, cfg.operational());
}

std::vector<double> Trajectory::series(Component c) const {
    std::vector<double> out;
    out.reserve(states.size());
    for (const AdmState& s : states) out.push_back(s[c]);
    return out;
}

namespace {

ReactorContext context_for(const ReactorConfig& cfg, const AdmParams& p, AlgebraicMode mode,
                           const NewtonConfig& newton, StepStats* stats) {
    const Operational& op = p.op;
    if (op.V_liq != cfg.v_liq || op.V_gas != cfg.v_gas || op.T != cfg.temperature_k ||
        op.P_atm != cfg.pressure_bar)
        throw ConfigError("reactor: params were built for different operating conditions");
    ReactorContext ctx;
    ctx.params = &p;
    ctx.inflow = &cfg.inflow;
    ctx.q_in = cfg.q_in;
    ctx.q_out = cfg.q_out;
    ctx.mode = mode;
    ctx.newton = newton;
    ctx.stats = stats;
    return ctx;
}

} // namespace

Derivative cstr_rhs(const AdmState& s, const ReactorConfig& cfg, const AdmParams& p,
                    AlgebraicMode mode) {
    const ReactorContext ctx = context_for(cfg, p, mode, {}, nullptr);
    return eval_rhs(s, ctx);
}

Trajectory run(const ReactorConfig& cfg, const AdmParams& params, const AdmState& initial,
               double duration_days, const IntegratorConfig& icfg, long output_stride,
               RunStats* stats) {
    cfg.validate();
    if (duration_days < 0.0) throw ConfigError("run: duration must be >= 0");
    if (output_stride < 1) throw ConfigError("run: output stride must be >= 1");
    if (!(icfg.dt_seconds > 0.0)) throw ConfigError("run: dt must be > 0");

    StepStats local_stats;
    StepStats* st = stats ? &stats->steps : &local_stats;
    const ReactorContext ctx = context_for(cfg, params, icfg.mode, icfg.newton, st);

    const double dt_d = seconds_to_days(icfg.dt_seconds);
    const long n_steps = std::llround(duration_days / dt_d);

    AdmState s = initial;
    make_consistent(s, ctx);

    Trajectory traj;
    const std::size_t expected = static_cast<std::size_t>(n_steps / output_stride) + 2;
    traj.time_d.reserve(expected);
    traj.states.reserve(expected);
    traj.ph.reserve(expected);
    traj.q_gas.reserve(expected);

    auto record = [&](long k) {
        traj.time_d.push_back(static_cast<double>(k) * dt_d);
        traj.states.push_back(s);
        traj.ph.push_back(s.ph());
        const Derivative d = eval_rhs(s, ctx);
        traj.q_gas.push_back(d.q_gas);
    };

    record(0);
    for (long k = 1; k <= n_steps; ++k) {
        try {
            step_fixed(s, ctx, dt_d, icfg.scheme);
        } catch (const SolverError& e) {
            throw SolverError("at t = " + std::to_string(static_cast<double>(k) * dt_d) +
                              " d: " + e.what());
        }
        if (k % output_stride == 0 || k == n_steps) record(k);
    }
    return traj;
}

double scaled_rhs_norm(const AdmState& s, const ReactorConfig& cfg, const AdmParams& p,
                       AlgebraicMode mode, double floor) {
    const Derivative d = cstr_rhs(s, cfg, p, mode);
    double worst = 0.0;
    for (int i = 0; i < kNumComponents; ++i) {
        if (mode == AlgebraicMode::dae &&
            (i == S_h2 || (i >= kFirstIonState && i <= kLastIonState)))
            continue; // algebraic entries have no meaningful time derivative
        const auto k = static_cast<std::size_t>(i);
        const double den = std::max(std::abs(s.y[k]), floor);
        worst = std::max(worst, std::abs(d.dy[k]) / den);
    }
    return worst;
}

AdmState find_steady_state(const ReactorConfig& cfg, const AdmParams& params,
                           const AdmState& initial, const IntegratorConfig& icfg,
                           double max_days, double tol, double* achieved) {
    const double chunk = 10.0;
    AdmState s = initial;
    {
        ReactorContext ctx = context_for(cfg, params, icfg.mode, icfg.newton, nullptr);
        make_consistent(s, ctx);
    }
    double elapsed = 0.0;
    double norm = scaled_rhs_norm(s, cfg, params, icfg.mode);
    while (norm > tol && elapsed < max_days) {
        const double span = std::min(chunk, max_days - elapsed);
        Trajectory t = run(cfg, params, s, span, icfg, 1000000000L);
        s = t.states.back();
        elapsed += span;
        norm = scaled_rhs_norm(s, cfg, params, icfg.mode);
    }
    if (achieved) *achieved = norm;
    return s;
}

double relative_rmse(const std::vector<double>& candidate, const std::vector<double>& reference) {
    if (candidate.size() != reference.size() || candidate.empty())
        throw ConfigError("relative_rmse: series length mismatch");
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < candidate.size(); ++i) {
        const double e = candidate[i] - reference[i];
        num += e * e;
        den += reference[i] * reference[i];
    }
    if (den == 0.0)
        throw ConfigError("relative_rmse: reference series is identically zero");
    return 100.0 * std::sqrt(num / static_cast<double>(candidate.size())) /
           std::sqrt(den / static_cast<double>(candidate.size()));
}

namespace {

void check_grids(const Trajectory& a, const Trajectory& b) {
    if (a.rows() != b.rows())
        throw ConfigError("relative_rmse: trajectories have different lengths (" +
                          std::to_string(a.rows()) + " vs " + std::to_string(b.rows()) + ")");
    for (std::size_t i = 0; i < a.rows(); ++i)
        if (std::abs(a.time_d[i] - b.time_d[i]) > 1.0e-9)
            throw ConfigError("relative_rmse: time grids differ at row " + std::to_string(i));
}

} // namespace

double relative_rmse(const Trajectory& candidate, const Trajectory& reference, Component c) {
    check_grids(candidate, reference);
    return relative_rmse(candidate.series(c), reference.series(c));
}

double relative_rmse_ph(const Trajectory& candidate, const Trajectory& reference) {
    check_grids(candidate, reference);
    return relative_rmse(candidate.ph, reference.ph);
}

} // namespace chad
