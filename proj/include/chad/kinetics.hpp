#pragma once

#include <array>

#include "chad/inhibition.hpp"
#include "chad/params.hpp"
#include "chad/state.hpp"

namespace chad {

// Biochemical process indices (rows of the stoichiometric matrix).
enum Process : int {
    p_disintegration = 0,
    p_hydrolysis_ch,
    p_hydrolysis_pr,
    p_hydrolysis_li,
    p_uptake_su,
    p_uptake_aa,
    p_uptake_fa,
    p_uptake_va,
    p_uptake_bu,
    p_uptake_pro,
    p_uptake_ac,
    p_uptake_h2,
    p_decay_xsu,
    p_decay_xaa,
    p_decay_xfa,
    p_decay_xc4,
    p_decay_xpro,
    p_decay_xac,
    p_decay_xh2,
};
inline constexpr int kNumProcesses = 19;

/// Biochemical process rates rho_j (kgCOD m^-3 d^-1) plus the three
/// gas-transfer rates. The biochemical rates are non-negative for any
/// non-negative state; transfer rates are signed (negative = absorption).
struct ProcessRates {
    std::array<double, kNumProcesses> rho{};
    double t_h2 = 0, t_ch4 = 0, t_co2 = 0;
};

/// Counters for the negative-concentration clamp policy.
struct RateDiagnostics {
    long clamped = 0; // entries in (-tol, 0) zeroed before rate evaluation
};

/// All 19 biochemical rates plus gas transfer for one state. Concentrations
/// within the configured tolerance below zero are clamped to zero (counted
/// when diag is given); anything more negative raises InvalidStateError.
ProcessRates process_rates(const AdmState& s, const AdmParams& p, RateDiagnostics* diag = nullptr);

/// Reaction contribution sum_j rho_j nu_ij for every liquid-phase component.
/// Ion and gas entries are zero here: acid-base kinetics and headspace terms
/// are composed separately by the reactor right-hand side.
std::array<double, kNumComponents> stoichiometric_rhs(const ProcessRates& r, const AdmParams& p);

/// The assembled 19 x 35 stoichiometric matrix (row = process). Used by the
/// conservation checks and as the cross-check partner of stoichiometric_rhs.
struct StoichMatrix {
    std::array<std::array<double, kNumComponents>, kNumProcesses> nu{};
};
StoichMatrix stoich_matrix(const AdmParams& p);

/// Headspace partial pressures (bar) of one state.
struct PartialPressures {
    double h2 = 0, ch4 = 0, co2 = 0, h2o = 0;
    double total() const { return h2 + ch4 + co2 + h2o; }
};
PartialPressures partial_pressures(const AdmState& s, const AdmParams& p);

/// Headspace derivative and vent flow. q_gas = k_p * (P - P_atm), clamped at
/// zero when the headspace is at or below atmospheric pressure.
struct GasPhaseRhs {
    double d_gas_h2 = 0, d_gas_ch4 = 0, d_gas_co2 = 0;
    double q_gas = 0; // m3/d
};
GasPhaseRhs gas_phase_rhs(const AdmState& s, const ProcessRates& r, const AdmParams& p);

/// Acid-base interconversion rates for the six ion states (DE mode only);
/// d(ion)/dt = -rate. Order: va, bu, pro, ac, hco3, nh3.
std::array<double, 6> acid_base_rates(const AdmState& s, const AdmParams& p);

/// Ion fractions of the parent totals at a given proton concentration.
struct IonStates {
    double va = 0, bu = 0, pro = 0, ac = 0, hco3 = 0, nh3 = 0;
};
IonStates ion_states_at(double s_h, const AdmState& s, const AdmParams& p);

} // namespace chad
