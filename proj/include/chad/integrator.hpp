#pragma once

#include <array>

#include "chad/charge_balance.hpp"
#include "chad/kinetics.hpp"
#include "chad/params.hpp"
#include "chad/state.hpp"

namespace chad {

enum class Scheme { fixed_euler, fixed_rk4_oracle };

/// How the fast subsystem is treated.
///   dae : S_h2 and the six ion states are algebraic (root solves per step).
///   de  : everything is integrated; acid-base uses kinetic rates and the
///         proton concentration follows from the quadratic closed form.
enum class AlgebraicMode { dae, de };

struct IntegratorConfig {
    Scheme scheme = Scheme::fixed_euler;
    double dt_seconds = 0.05;   // inner biokinetic step
    int substeps_per_outer = 10;
    AlgebraicMode mode = AlgebraicMode::dae;
    NewtonConfig newton;
};

inline double seconds_to_days(double s) { return s / 86400.0; }

/// Accumulated per-run solver diagnostics.
struct StepStats {
    long steps = 0;
    long rhs_evals = 0;
    long proton_iterations = 0;
    long sh2_iterations = 0;
    double max_proton_residual = 0.0; // max |E| over accepted proton solves
    long clamped = 0;                 // tiny-negative clamps (state + rate evals)
};

/// Everything a right-hand-side evaluation needs besides the state itself.
/// inflow may alias the state for closed reactors (q_in = 0).
struct ReactorContext {
    const AdmParams* params = nullptr;
    const AdmState* inflow = nullptr;
    double q_in = 0.0;  // m3/d
    double q_out = 0.0; // m3/d
    AlgebraicMode mode = AlgebraicMode::dae;
    NewtonConfig newton;
    StepStats* stats = nullptr;
};

struct Derivative {
    std::array<double, kNumComponents> dy{};
    double q_gas = 0.0;
};

/// Solve the algebraic subsystem so the state satisfies the charge balance
/// (and, in DAE mode, the hydrogen balance). Warm-starts from the values
/// already in the state.
void make_consistent(AdmState& s, const ReactorContext& ctx);

/// Full constant-volume derivative vector at a consistent state: dilution
/// plus reaction for the liquid components, acid-base kinetics for the ion
/// states (DE mode), headspace dynamics for the gas states.
Derivative eval_rhs(const AdmState& s, const ReactorContext& ctx);

/// One explicit fixed step over the differential states, followed by the
/// algebraic solves. The state must be consistent on entry (run make_consistent
/// once before the first step) and is consistent on return.
void step_fixed(AdmState& s, const ReactorContext& ctx, double dt_days, Scheme scheme);

} // namespace chad
