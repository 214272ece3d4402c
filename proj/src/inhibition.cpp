#include "chad/inhibition.hpp"

#include <cmath>
#include <stdexcept>

namespace chad {

namespace {

// pow() for the small Hill exponents; the default set uses 2 and 3.
inline double hill_pow(double x, double n) {
    if (n == 2.0) return x * x;
    if (n == 3.0) return x * x * x;
    return std::pow(x, n);
}

} // namespace

double hill_inhibition(double ph, double ph_ll, double ph_ul, double n) {
    if (!(ph > 0.0)) throw std::domain_error("hill_inhibition: pH must be > 0");
    if (!(ph_ll < ph_ul)) throw std::domain_error("hill_inhibition: pH_LL must be < pH_UL");
    if (!(n > 0.0)) throw std::domain_error("hill_inhibition: n must be > 0");
    const double k_ph = (ph_ll + ph_ul) / 2.0;
    const double a = hill_pow(ph, n);
    const double b = hill_pow(k_ph, n);
    return a / (a + b);
}

double hill_inhibition_hplus(double s_h, double ph_ll, double ph_ul) {
    if (!(s_h > 0.0)) throw std::domain_error("hill_inhibition_hplus: S_H+ must be > 0");
    if (!(ph_ll < ph_ul)) throw std::domain_error("hill_inhibition_hplus: pH_LL must be < pH_UL");
    const double lim = std::pow(10.0, -(ph_ul + ph_ll) / 2.0);
    const double n = 3.0 / (ph_ul - ph_ll);
    const double a = hill_pow(lim, n);
    return a / (hill_pow(s_h, n) + a);
}

double noncompetitive_inhibition(double s_i, double k_i) {
    if (!(k_i > 0.0)) throw std::domain_error("noncompetitive_inhibition: K_I must be > 0");
    if (s_i < 0.0) throw std::domain_error("noncompetitive_inhibition: S_I must be >= 0");
    return 1.0 / (1.0 + s_i / k_i);
}

double substrate_limitation(double s_i, double k_i) {
    if (!(k_i > 0.0)) throw std::domain_error("substrate_limitation: K_I must be > 0");
    if (s_i < 0.0) throw std::domain_error("substrate_limitation: S_I must be >= 0");
    return s_i / (s_i + k_i);
}

InhibitionFactors InhibitionFactors::compute(const AdmState& s, const AdmParams& p) {
    InhibitionFactors f;
    if (p.base.ph_form == PhInhibitionForm::hydrogen_ion) {
        const double sh = s.s_h;
        if (!(sh > 0.0))
            throw std::domain_error("inhibition: proton concentration not solved yet");
        const double a_aa = hill_pow(p.ph_lim_aa, p.n_hion_aa);
        const double a_ac = hill_pow(p.ph_lim_ac, p.n_hion_ac);
        const double a_h2 = hill_pow(p.ph_lim_h2, p.n_hion_h2);
        f.i_ph_aa = a_aa / (hill_pow(sh, p.n_hion_aa) + a_aa);
        f.i_ph_ac = a_ac / (hill_pow(sh, p.n_hion_ac) + a_ac);
        f.i_ph_h2 = a_h2 / (hill_pow(sh, p.n_hion_h2) + a_h2);
    } else {
        const double ph = s.ph();
        f.i_ph_aa = hill_inhibition(ph, p.base.pH_LL_aa, p.base.pH_UL_aa, p.base.hill_n_aa);
        f.i_ph_ac = hill_inhibition(ph, p.base.pH_LL_ac, p.base.pH_UL_ac, p.base.hill_n_ac);
        f.i_ph_h2 = hill_inhibition(ph, p.base.pH_LL_h2, p.base.pH_UL_h2, p.base.hill_n_h2);
    }
    const double s_in = s[S_IN] > 0.0 ? s[S_IN] : 0.0;
    const double s_h2 = s[S_h2] > 0.0 ? s[S_h2] : 0.0;
    const double s_nh3 = s[S_nh3] > 0.0 ? s[S_nh3] : 0.0;
    f.i_in_lim = s_in / (s_in + p.base.K_S_IN);
    f.i_h2_fa = 1.0 / (1.0 + s_h2 / p.base.K_I_h2_fa);
    f.i_h2_c4 = 1.0 / (1.0 + s_h2 / p.base.K_I_h2_c4);
    f.i_h2_pro = 1.0 / (1.0 + s_h2 / p.base.K_I_h2_pro);
    f.i_nh3 = 1.0 / (1.0 + s_nh3 / p.base.K_I_nh3);
    return f;
}

double InhibitionFactors::product(UptakeGroup g) const {
    switch (g) {
    case UptakeGroup::sugars:
    case UptakeGroup::amino_acids:
        return i_ph_aa * i_in_lim;
    case UptakeGroup::lcfa:
        return i_ph_aa * i_in_lim * i_h2_fa;
    case UptakeGroup::valerate:
    case UptakeGroup::butyrate:
        return i_ph_aa * i_in_lim * i_h2_c4;
    case UptakeGroup::propionate:
        return i_ph_aa * i_in_lim * i_h2_pro;
    case UptakeGroup::acetate:
        return i_ph_ac * i_in_lim * i_nh3;
    case UptakeGroup::hydrogen:
        return i_ph_h2 * i_in_lim;
    }
    return 1.0;
}

double total_inhibition(UptakeGroup g, const AdmState& s, const AdmParams& p) {
    return InhibitionFactors::compute(s, p).product(g);
}

} // namespace chad
