#include "chad/integrator.hpp"

#include <stdexcept>

namespace chad {

namespace {

inline bool is_algebraic_in_dae(int i) {
    return i == S_h2 || (i >= kFirstIonState && i <= kLastIonState);
}

// Differential update with the tiny-negative clamp of the integration policy.
inline void apply_update(AdmState& out, const AdmState& base,
                         const std::array<double, kNumComponents>& dy, double h,
                         AlgebraicMode mode, const AdmParams& p, StepStats* stats) {
    const double tol = p.base.negative_tolerance;
    for (int i = 0; i < kNumComponents; ++i) {
        if (mode == AlgebraicMode::dae && is_algebraic_in_dae(i)) continue;
        const auto k = static_cast<std::size_t>(i);
        double v = base.y[k] + h * dy[k];
        if (v < 0.0 && v > -tol) {
            v = 0.0;
            if (stats) ++stats->clamped;
        }
        out.y[k] = v;
    }
}

} // namespace

void make_consistent(AdmState& s, const ReactorContext& ctx) {
    if (ctx.mode == AlgebraicMode::de) {
        apply_proton_quadratic(s, *ctx.params);
        return;
    }
    const SolveStats ph = solve_proton(s, *ctx.params, ctx.newton);
    const SolveStats h2 = solve_sh2(s, *ctx.inflow, ctx.q_in, *ctx.params, ctx.newton);
    if (ctx.stats) {
        ctx.stats->proton_iterations += ph.iterations;
        ctx.stats->sh2_iterations += h2.iterations;
        const double r = ph.residual < 0 ? -ph.residual : ph.residual;
        if (r > ctx.stats->max_proton_residual) ctx.stats->max_proton_residual = r;
    }
}

Derivative eval_rhs(const AdmState& s, const ReactorContext& ctx) {
    const AdmParams& p = *ctx.params;
    RateDiagnostics diag;
    const ProcessRates rates = process_rates(s, p, &diag);
    const auto reac = stoichiometric_rhs(rates, p);
    const GasPhaseRhs gas = gas_phase_rhs(s, rates, p);
    if (ctx.stats) {
        ++ctx.stats->rhs_evals;
        ctx.stats->clamped += diag.clamped;
    }

    Derivative d;
    const double inv_v = 1.0 / p.op.V_liq;
    for (int i = 0; i <= S_an; ++i) {
        const auto k = static_cast<std::size_t>(i);
        d.dy[k] = (ctx.q_in * (*ctx.inflow).y[k] - ctx.q_out * s.y[k]) * inv_v + reac[k];
    }
    d.dy[S_h2] -= rates.t_h2;
    d.dy[S_ch4] -= rates.t_ch4;
    d.dy[S_IC] -= rates.t_co2;

    if (ctx.mode == AlgebraicMode::de) {
        const auto ab = acid_base_rates(s, p);
        for (int i = 0; i < 6; ++i)
            d.dy[static_cast<std::size_t>(kFirstIonState + i)] = -ab[static_cast<std::size_t>(i)];
    }

    d.dy[S_gas_h2] = gas.d_gas_h2;
    d.dy[S_gas_ch4] = gas.d_gas_ch4;
    d.dy[S_gas_co2] = gas.d_gas_co2;
    d.q_gas = gas.q_gas;
    return d;
}

void step_fixed(AdmState& s, const ReactorContext& ctx, double dt_days, Scheme scheme) {
    if (!(dt_days > 0.0)) throw ConfigError("step_fixed: dt must be > 0");
    const AdmParams& p = *ctx.params;

    if (scheme == Scheme::fixed_euler) {
        const Derivative k1 = eval_rhs(s, ctx);
        apply_update(s, s, k1.dy, dt_days, ctx.mode, p, ctx.stats);
        make_consistent(s, ctx);
    } else {
        // Classic RK4 on the reduced system: every stage state is made
        // algebraically consistent before its derivative is taken.
        const AdmState s0 = s;
        const Derivative k1 = eval_rhs(s0, ctx);

        AdmState tmp = s0;
        apply_update(tmp, s0, k1.dy, 0.5 * dt_days, ctx.mode, p, ctx.stats);
        make_consistent(tmp, ctx);
        const Derivative k2 = eval_rhs(tmp, ctx);

        tmp = s0;
        apply_update(tmp, s0, k2.dy, 0.5 * dt_days, ctx.mode, p, ctx.stats);
        make_consistent(tmp, ctx);
        const Derivative k3 = eval_rhs(tmp, ctx);

        tmp = s0;
        apply_update(tmp, s0, k3.dy, dt_days, ctx.mode, p, ctx.stats);
        make_consistent(tmp, ctx);
        const Derivative k4 = eval_rhs(tmp, ctx);

        std::array<double, kNumComponents> combined{};
        for (int i = 0; i < kNumComponents; ++i) {
            const auto k = static_cast<std::size_t>(i);
            combined[k] =
                (k1.dy[k] + 2.0 * k2.dy[k] + 2.0 * k3.dy[k] + k4.dy[k]) * (1.0 / 6.0);
        }
        apply_update(s, s0, combined, dt_days, ctx.mode, p, ctx.stats);
        make_consistent(s, ctx);
    }
    if (ctx.stats) ++ctx.stats->steps;
}

} // namespace chad
