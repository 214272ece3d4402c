#pragma once

#include "chad/kinetics.hpp"
#include "chad/params.hpp"
#include "chad/state.hpp"

namespace chad {

/// Root-solver settings for the algebraic subsystem.
struct NewtonConfig {
    int max_iterations = 50;
    double absolute_tolerance = 1.0e-12; // residual, kmol/m3 for the proton solve
    double relative_tolerance = 1.0e-14; // scales the rate-residual floor of the S_h2 solve
    enum class Guess { previous_value, neutral_ph, midpoint } initial_guess = Guess::previous_value;
};

struct SolveStats {
    int iterations = 0; // residual evaluations
    int bisections = 0; // safeguard steps taken
    double residual = 0.0;
};

/// Electroneutrality residual at a candidate proton concentration, with every
/// ion fraction expressed through its acid-base equilibrium at that
/// candidate:
///   E = S_cat + S_nh4 + S_H - S_hco3 - S_ac/64 - S_pro/112 - S_bu/160
///       - S_va/208 - K_w/S_H - S_an
/// Strictly increasing in S_H for non-negative totals, so the root is unique.
/// Throws std::domain_error for s_h <= 0.
double charge_balance_residual(double s_h, const AdmState& s, const AdmParams& p);

/// d/dS_H of charge_balance_residual (always positive).
double charge_balance_gradient(double s_h, const AdmState& s, const AdmParams& p);

/// Newton-Raphson on the charge balance with a maintained bracket; any
/// iterate leaving the bracket is replaced by a logarithmic bisection step.
/// On success updates s.s_h and the six dependent ion states consistently.
/// Throws SolverError (with the iteration trace) if the residual tolerance
/// is not reached within max_iterations.
SolveStats solve_proton(AdmState& s, const AdmParams& p, const NewtonConfig& cfg);

/// Algebraic soluble-hydrogen balance
///   0 = q_in/V (S_h2,in - S_h2) + net biochemical term(S_h2) - transfer(S_h2)
/// where every S_h2-dependent uptake and inhibition term is re-evaluated at
/// the candidate value. Requires a solved proton concentration (the pH
/// switches enter the production terms). Updates s[S_h2] on success.
SolveStats solve_sh2(AdmState& s, const AdmState& inflow, double q_in, const AdmParams& p,
                     const NewtonConfig& cfg);

/// DE-mode closed form: with the six ion states integrated, the charge
/// balance is quadratic in S_H. Updates s.s_h only.
void apply_proton_quadratic(AdmState& s, const AdmParams& p);

} // namespace chad
