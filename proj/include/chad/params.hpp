#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "chad/errors.hpp"
#include "chad/state.hpp"

namespace chad {

/// Which algebraic form the pH inhibition switch uses.
///   hydrogen_ion : Hill switch evaluated in S_H+ with a log-scale midpoint
///                  10^-(pH_UL+pH_LL)/2 and exponent 3/(pH_UL-pH_LL).
///   ph           : Hill switch evaluated in pH with midpoint
///                  (pH_LL+pH_UL)/2 and a configurable exponent per group.
/// Both are lower-bound switches that approach 1 at high pH. The default is
/// the hydrogen-ion form, which is what the reference digester model uses.
enum class PhInhibitionForm { hydrogen_ion, ph };

/// Everything the parameter file stores: kinetic, stoichiometric and
/// physiochemical constants on their reference-temperature basis, plus the
/// van 't Hoff enthalpies used to move them to the operating temperature.
/// Values are the standard digester-benchmark set, shipped as the embedded
/// default and dumpable via the CLI.
struct ParamSet {
    int param_set_version = 1;

    // --- disintegration fractions and elemental contents ---------------
    double f_sI_xc = 0.1;
    double f_xI_xc = 0.2;
    double f_ch_xc = 0.2;
    double f_pr_xc = 0.2;
    double f_li_xc = 0.3;
    double N_xc = 0.0376 / 14.0;  // kmol N per kgCOD
    double N_I = 0.06 / 14.0;
    double N_aa = 0.007;
    double N_bac = 0.08 / 14.0;
    double C_xc = 0.02786; // kmol C per kgCOD
    double C_sI = 0.03;
    double C_ch = 0.0313;
    double C_pr = 0.03;
    double C_li = 0.022;
    double C_xI = 0.03;
    double C_su = 0.0313;
    double C_aa = 0.03;
    double C_fa = 0.0217;
    double C_bu = 0.025;
    double C_pro = 0.0268;
    double C_ac = 0.0313;
    double C_bac = 0.0313;
    double C_va = 0.024;
    double C_ch4 = 0.0156;

    // --- product fractions and yields -----------------------------------
    double f_fa_li = 0.95;
    double f_h2_su = 0.19;
    double f_bu_su = 0.13;
    double f_pro_su = 0.27;
    double f_ac_su = 0.41;
    double f_h2_aa = 0.06;
    double f_va_aa = 0.23;
    double f_bu_aa = 0.26;
    double f_pro_aa = 0.05;
    double f_ac_aa = 0.40;
    double Y_su = 0.1;
    double Y_aa = 0.08;
    double Y_fa = 0.06;
    double Y_c4 = 0.06;
    double Y_pro = 0.04;
    double Y_ac = 0.05;
    double Y_h2 = 0.06;

    // --- first-order and Monod kinetics (per day) ------------------------
    double k_dis = 0.5;
    double k_hyd_ch = 10.0;
    double k_hyd_pr = 10.0;
    double k_hyd_li = 10.0;
    double k_m_su = 30.0;
    double K_S_su = 0.5;
    double k_m_aa = 50.0;
    double K_S_aa = 0.3;
    double k_m_fa = 6.0;
    double K_S_fa = 0.4;
    double k_m_c4 = 20.0;
    double K_S_c4 = 0.2;
    double k_m_pro = 13.0;
    double K_S_pro = 0.1;
    double k_m_ac = 8.0;
    double K_S_ac = 0.15;
    double k_m_h2 = 35.0;
    double K_S_h2 = 7.0e-6;
    double k_dec_xsu = 0.02;
    double k_dec_xaa = 0.02;
    double k_dec_xfa = 0.02;
    double k_dec_xc4 = 0.02;
    double k_dec_xpro = 0.02;
    double k_dec_xac = 0.02;
    double k_dec_xh2 = 0.02;

    // --- inhibition -------------------------------------------------------
    double K_S_IN = 1.0e-4;     // nitrogen limitation half-saturation, kmol/m3
    double K_I_h2_fa = 5.0e-6;  // kgCOD/m3
    double K_I_h2_c4 = 1.0e-5;
    double K_I_h2_pro = 3.5e-6;
    double K_I_nh3 = 1.8e-3; // kmol/m3
    double pH_UL_aa = 5.5;
    double pH_LL_aa = 4.0;
    double pH_UL_ac = 7.0;
    double pH_LL_ac = 6.0;
    double pH_UL_h2 = 6.0;
    double pH_LL_h2 = 5.0;
    // Hill exponents for the pH-domain form; the hydrogen-ion form derives
    // its exponents as 3/(pH_UL-pH_LL), which gives the same three numbers.
    double hill_n_aa = 2.0;
    double hill_n_ac = 3.0;
    double hill_n_h2 = 3.0;
    PhInhibitionForm ph_form = PhInhibitionForm::hydrogen_ion;

    // --- acid-base and gas-liquid physiochemistry -----------------------
    double T_base = 298.15;      // K, reference temperature of the constants
    double R_gas = 0.083145;     // bar m3 kmol^-1 K^-1
    double K_w_base = 1.0e-14;   // kmol^2/m6 at T_base
    double dH_K_w = 55900.0;     // J/mol
    double K_a_va = 1.380384264602885e-5;  // 10^-4.86, temperature-independent
    double K_a_bu = 1.513561248436207e-5;  // 10^-4.82
    double K_a_pro = 1.318256738556407e-5; // 10^-4.88
    double K_a_ac = 1.737800828749375e-5;  // 10^-4.76
    double K_a_co2_base = 4.466835921509630e-7; // 10^-6.35
    double dH_K_a_co2 = 7646.0;
    double K_a_IN_base = 5.623413251903491e-10; // 10^-9.25
    double dH_K_a_IN = 51965.0;
    double k_A_B = 1.0e10; // acid-base kinetic rate, m3 kmol^-1 d^-1 (DE mode)
    double K_H_h2_base = 7.8e-4; // kmol m^-3 bar^-1 at T_base
    double dH_K_H_h2 = -4180.0;
    double K_H_ch4_base = 1.4e-3;
    double dH_K_H_ch4 = -14240.0;
    double K_H_co2_base = 3.5e-2;
    double dH_K_H_co2 = -19410.0;
    double p_h2o_base = 0.0313;  // bar at T_base
    double dH_vap_over_R = 5290.0; // K (lumped Clausius-Clapeyron constant)
    double k_L_a = 200.0; // gas-liquid transfer coefficient, d^-1
    // Vent friction: k_p holds for a vessel with k_p_ref_v_gas of headspace
    // and scales linearly with V_gas, so reactors of any size vent at the
    // same relative rate. At V_gas = 300 m3 the effective value is the
    // benchmark digester's 5e4 m3 d^-1 bar^-1 exactly.
    double k_p = 5.0e4;          // m3 d^-1 bar^-1 at the reference headspace
    double k_p_ref_v_gas = 300.0; // m3

    // --- numerical policy -------------------------------------------------
    double negative_tolerance = 1.0e-12; // clamp band for integrator undershoot

    static ParamSet defaults() { return {}; }

    /// Defaults overridden by a key=value file. Unknown keys are an error.
    static ParamSet load(const std::filesystem::path& file);
    static ParamSet from_string(std::string_view text, const std::string& name);

    /// Canonical file emission (17 significant digits, grouped, commented).
    void dump(std::ostream& os) const;
    std::string dump_string() const;

    /// Range/ordering checks (throws ConfigError).
    void validate() const;
};

/// Operating conditions of one reactor; shared by every particle of a field.
struct Operational {
    double V_liq = 3400.0;  // m3
    double V_gas = 300.0;   // m3
    double T = 308.5;       // K
    double P_atm = 1.013;   // bar
};

/// Runtime parameter block: the raw set plus every temperature-corrected
/// constant and precomputed inhibition midpoint. Immutable after make();
/// safe to share read-only between any number of workers.
struct AdmParams {
    ParamSet base;
    Operational op;

    // temperature-corrected at op.T
    double K_w = 0;
    double K_a_co2 = 0;
    double K_a_IN = 0;
    double K_H_h2 = 0;
    double K_H_ch4 = 0;
    double K_H_co2 = 0;
    double p_gas_h2o = 0;
    double k_p_eff = 0; // vent friction scaled to op.V_gas

    // hydrogen-ion Hill form: midpoints and exponents per trophic group
    double ph_lim_aa = 0, ph_lim_ac = 0, ph_lim_h2 = 0; // 10^-(UL+LL)/2
    double n_hion_aa = 0, n_hion_ac = 0, n_hion_h2 = 0; // 3/(UL-LL)
    // pH-domain Hill form midpoints
    double k_ph_aa = 0, k_ph_ac = 0, k_ph_h2 = 0; // (LL+UL)/2

    static AdmParams make(const ParamSet& base, const Operational& op);
};

/// van 't Hoff correction of an equilibrium/Henry constant from t_base to t.
/// Exact identity at t == t_base. dh in J/mol, r_bar in bar m3 kmol^-1 K^-1.
double vant_hoff(double k_base, double dh, double t_base, double t, double r_bar);

// ---------------------------------------------------------------------------
// Canonical state vectors of the benchmark digester case: the constant
// influent composition and the near-steady initial charge. Both can be
// overridden by state files (same key=value format, component names as keys).
AdmState default_influent();
AdmState default_initial_state();

AdmState load_state_file(const std::filesystem::path& file);
void dump_state(const AdmState& s, std::ostream& os);

} // namespace chad
