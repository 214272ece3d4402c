#pragma once

#include "chad/params.hpp"
#include "chad/state.hpp"

namespace chad {

/// Hill pH switch in the pH domain: pH^n / (pH^n + K^n) with midpoint
/// K = (pH_LL + pH_UL)/2. Monotone increasing in pH, 0.5 exactly at the
/// midpoint, limits 0 and 1 towards pH -> 0 and pH -> inf.
/// Throws std::domain_error for pH <= 0 (log-scale quantity) or bad limits.
double hill_inhibition(double ph, double ph_ll, double ph_ul, double n);

/// Hill pH switch in the hydrogen-ion domain: K^n / (S_H^n + K^n) with
/// K = 10^-(pH_UL+pH_LL)/2 and n = 3/(pH_UL-pH_LL). This is the form the
/// benchmark digester model runs; it is likewise increasing in pH.
double hill_inhibition_hplus(double s_h, double ph_ll, double ph_ul);

/// Non-competitive inhibition 1/(1 + S_I/K_I); strictly decreasing in S_I.
double noncompetitive_inhibition(double s_i, double k_i);

/// Substrate limitation S_I/(S_I + K_I); strictly increasing, 0 at S_I = 0.
double substrate_limitation(double s_i, double k_i);

enum class UptakeGroup {
    sugars,
    amino_acids,
    lcfa,
    valerate,
    butyrate,
    propionate,
    acetate,
    hydrogen,
};

/// The shared inhibition factors evaluated once per rate evaluation.
struct InhibitionFactors {
    double i_ph_aa = 1, i_ph_ac = 1, i_ph_h2 = 1;
    double i_in_lim = 1;                            // nitrogen limitation
    double i_h2_fa = 1, i_h2_c4 = 1, i_h2_pro = 1;  // hydrogen inhibition
    double i_nh3 = 1;                               // free-ammonia inhibition

    static InhibitionFactors compute(const AdmState& s, const AdmParams& p);

    double product(UptakeGroup g) const;
};

/// Combined inhibition for one uptake process: the product of the pH switch
/// of its trophic group, nitrogen limitation, and (where applicable) the
/// hydrogen or free-ammonia factor.
double total_inhibition(UptakeGroup g, const AdmState& s, const AdmParams& p);

} // namespace chad
