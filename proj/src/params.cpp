#include "chad/params.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

#include "chad/settings.hpp"

namespace chad {

double vant_hoff(double k_base, double dh, double t_base, double t, double r_bar) {
    // 100*r_bar converts bar m3 kmol^-1 K^-1 to J mol^-1 K^-1.
    const double factor = (1.0 / t_base - 1.0 / t) / (100.0 * r_bar);
    return k_base * std::exp(dh * factor);
}

namespace {

struct ParamEntry {
    const char* key;
    double ParamSet::*member;
    const char* group; // nullptr = same group as previous entry
};

// Registry drives both load() and dump(); order here is the dump order.
const ParamEntry kRegistry[] = {
    {"f_sI_xc", &ParamSet::f_sI_xc, "disintegration fractions and elemental contents"},
    {"f_xI_xc", &ParamSet::f_xI_xc, nullptr},
    {"f_ch_xc", &ParamSet::f_ch_xc, nullptr},
    {"f_pr_xc", &ParamSet::f_pr_xc, nullptr},
    {"f_li_xc", &ParamSet::f_li_xc, nullptr},
    {"N_xc", &ParamSet::N_xc, nullptr},
    {"N_I", &ParamSet::N_I, nullptr},
    {"N_aa", &ParamSet::N_aa, nullptr},
    {"N_bac", &ParamSet::N_bac, nullptr},
    {"C_xc", &ParamSet::C_xc, nullptr},
    {"C_sI", &ParamSet::C_sI, nullptr},
    {"C_ch", &ParamSet::C_ch, nullptr},
    {"C_pr", &ParamSet::C_pr, nullptr},
    {"C_li", &ParamSet::C_li, nullptr},
    {"C_xI", &ParamSet::C_xI, nullptr},
    {"C_su", &ParamSet::C_su, nullptr},
    {"C_aa", &ParamSet::C_aa, nullptr},
    {"C_fa", &ParamSet::C_fa, nullptr},
    {"C_bu", &ParamSet::C_bu, nullptr},
    {"C_pro", &ParamSet::C_pro, nullptr},
    {"C_ac", &ParamSet::C_ac, nullptr},
    {"C_bac", &ParamSet::C_bac, nullptr},
    {"C_va", &ParamSet::C_va, nullptr},
    {"C_ch4", &ParamSet::C_ch4, nullptr},
    {"f_fa_li", &ParamSet::f_fa_li, "product fractions and yields"},
    {"f_h2_su", &ParamSet::f_h2_su, nullptr},
    {"f_bu_su", &ParamSet::f_bu_su, nullptr},
    {"f_pro_su", &ParamSet::f_pro_su, nullptr},
    {"f_ac_su", &ParamSet::f_ac_su, nullptr},
    {"f_h2_aa", &ParamSet::f_h2_aa, nullptr},
    {"f_va_aa", &ParamSet::f_va_aa, nullptr},
    {"f_bu_aa", &ParamSet::f_bu_aa, nullptr},
    {"f_pro_aa", &ParamSet::f_pro_aa, nullptr},
    {"f_ac_aa", &ParamSet::f_ac_aa, nullptr},
    {"Y_su", &ParamSet::Y_su, nullptr},
    {"Y_aa", &ParamSet::Y_aa, nullptr},
    {"Y_fa", &ParamSet::Y_fa, nullptr},
    {"Y_c4", &ParamSet::Y_c4, nullptr},
    {"Y_pro", &ParamSet::Y_pro, nullptr},
    {"Y_ac", &ParamSet::Y_ac, nullptr},
    {"Y_h2", &ParamSet::Y_h2, nullptr},
    {"k_dis", &ParamSet::k_dis, "first-order and Monod kinetics (per day)"},
    {"k_hyd_ch", &ParamSet::k_hyd_ch, nullptr},
    {"k_hyd_pr", &ParamSet::k_hyd_pr, nullptr},
    {"k_hyd_li", &ParamSet::k_hyd_li, nullptr},
    {"k_m_su", &ParamSet::k_m_su, nullptr},
    {"K_S_su", &ParamSet::K_S_su, nullptr},
    {"k_m_aa", &ParamSet::k_m_aa, nullptr},
    {"K_S_aa", &ParamSet::K_S_aa, nullptr},
    {"k_m_fa", &ParamSet::k_m_fa, nullptr},
    {"K_S_fa", &ParamSet::K_S_fa, nullptr},
    {"k_m_c4", &ParamSet::k_m_c4, nullptr},
    {"K_S_c4", &ParamSet::K_S_c4, nullptr},
    {"k_m_pro", &ParamSet::k_m_pro, nullptr},
    {"K_S_pro", &ParamSet::K_S_pro, nullptr},
    {"k_m_ac", &ParamSet::k_m_ac, nullptr},
    {"K_S_ac", &ParamSet::K_S_ac, nullptr},
    {"k_m_h2", &ParamSet::k_m_h2, nullptr},
    {"K_S_h2", &ParamSet::K_S_h2, nullptr},
    {"k_dec_xsu", &ParamSet::k_dec_xsu, nullptr},
    {"k_dec_xaa", &ParamSet::k_dec_xaa, nullptr},
    {"k_dec_xfa", &ParamSet::k_dec_xfa, nullptr},
    {"k_dec_xc4", &ParamSet::k_dec_xc4, nullptr},
    {"k_dec_xpro", &ParamSet::k_dec_xpro, nullptr},
    {"k_dec_xac", &ParamSet::k_dec_xac, nullptr},
    {"k_dec_xh2", &ParamSet::k_dec_xh2, nullptr},
    {"K_S_IN", &ParamSet::K_S_IN, "inhibition"},
    {"K_I_h2_fa", &ParamSet::K_I_h2_fa, nullptr},
    {"K_I_h2_c4", &ParamSet::K_I_h2_c4, nullptr},
    {"K_I_h2_pro", &ParamSet::K_I_h2_pro, nullptr},
    {"K_I_nh3", &ParamSet::K_I_nh3, nullptr},
    {"pH_UL_aa", &ParamSet::pH_UL_aa, nullptr},
    {"pH_LL_aa", &ParamSet::pH_LL_aa, nullptr},
    {"pH_UL_ac", &ParamSet::pH_UL_ac, nullptr},
    {"pH_LL_ac", &ParamSet::pH_LL_ac, nullptr},
    {"pH_UL_h2", &ParamSet::pH_UL_h2, nullptr},
    {"pH_LL_h2", &ParamSet::pH_LL_h2, nullptr},
    {"hill_n_aa", &ParamSet::hill_n_aa, nullptr},
    {"hill_n_ac", &ParamSet::hill_n_ac, nullptr},
    {"hill_n_h2", &ParamSet::hill_n_h2, nullptr},
    {"T_base", &ParamSet::T_base, "acid-base and gas-liquid physiochemistry"},
    {"R_gas", &ParamSet::R_gas, nullptr},
    {"K_w_base", &ParamSet::K_w_base, nullptr},
    {"dH_K_w", &ParamSet::dH_K_w, nullptr},
    {"K_a_va", &ParamSet::K_a_va, nullptr},
    {"K_a_bu", &ParamSet::K_a_bu, nullptr},
    {"K_a_pro", &ParamSet::K_a_pro, nullptr},
    {"K_a_ac", &ParamSet::K_a_ac, nullptr},
    {"K_a_co2_base", &ParamSet::K_a_co2_base, nullptr},
    {"dH_K_a_co2", &ParamSet::dH_K_a_co2, nullptr},
    {"K_a_IN_base", &ParamSet::K_a_IN_base, nullptr},
    {"dH_K_a_IN", &ParamSet::dH_K_a_IN, nullptr},
    {"k_A_B", &ParamSet::k_A_B, nullptr},
    {"K_H_h2_base", &ParamSet::K_H_h2_base, nullptr},
    {"dH_K_H_h2", &ParamSet::dH_K_H_h2, nullptr},
    {"K_H_ch4_base", &ParamSet::K_H_ch4_base, nullptr},
    {"dH_K_H_ch4", &ParamSet::dH_K_H_ch4, nullptr},
    {"K_H_co2_base", &ParamSet::K_H_co2_base, nullptr},
    {"dH_K_H_co2", &ParamSet::dH_K_H_co2, nullptr},
    {"p_h2o_base", &ParamSet::p_h2o_base, nullptr},
    {"dH_vap_over_R", &ParamSet::dH_vap_over_R, nullptr},
    {"k_L_a", &ParamSet::k_L_a, nullptr},
    {"k_p", &ParamSet::k_p, nullptr},
    {"k_p_ref_v_gas", &ParamSet::k_p_ref_v_gas, nullptr},
    {"negative_tolerance", &ParamSet::negative_tolerance, "numerical policy"},
};

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

ParamSet apply_settings(const SettingsFile& f) {
    ParamSet p; // defaults
    std::set<std::string> known;
    for (const auto& e : kRegistry) {
        known.insert(e.key);
        if (f.has(e.key)) p.*(e.member) = f.number(e.key);
    }
    known.insert("param_set_version");
    known.insert("ph_inhibition_form");
    if (f.has("param_set_version"))
        p.param_set_version = static_cast<int>(f.integer("param_set_version"));
    if (f.has("ph_inhibition_form")) {
        const std::string v = f.str("ph_inhibition_form");
        if (v == "hydrogen_ion")
            p.ph_form = PhInhibitionForm::hydrogen_ion;
        else if (v == "ph")
            p.ph_form = PhInhibitionForm::ph;
        else
            throw ParseError(f.name(), f.line_of("ph_inhibition_form"),
                             "ph_inhibition_form must be 'hydrogen_ion' or 'ph', got '" + v + "'");
    }
    for (const auto& k : f.keys())
        if (!known.count(k))
            throw ParseError(f.name(), f.line_of(k), "unknown parameter key '" + k + "'");
    p.validate();
    return p;
}

} // namespace

ParamSet ParamSet::load(const std::filesystem::path& file) {
    return apply_settings(SettingsFile::parse_file(file));
}

ParamSet ParamSet::from_string(std::string_view text, const std::string& name) {
    return apply_settings(SettingsFile::parse_string(text, name));
}

void ParamSet::dump(std::ostream& os) const {
    os << "# Digester biokinetics parameter set (reference-temperature basis).\n";
    os << "# dH_* values are van 't Hoff enthalpies in J/mol applied between\n";
    os << "# T_base and the operating temperature.\n";
    os << "param_set_version = " << param_set_version << "\n";
    for (const auto& e : kRegistry) {
        if (e.group) os << "\n# " << e.group << "\n";
        os << e.key << " = " << fmt17(this->*(e.member)) << "\n";
    }
    os << "\n# pH inhibition switch form: 'hydrogen_ion' or 'ph'\n";
    os << "ph_inhibition_form = "
       << (ph_form == PhInhibitionForm::hydrogen_ion ? "hydrogen_ion" : "ph") << "\n";
}

std::string ParamSet::dump_string() const {
    std::ostringstream os;
    dump(os);
    return os.str();
}

void ParamSet::validate() const {
    auto positive = [](double v, const char* name) {
        if (!(v > 0.0)) throw ConfigError(std::string("parameter ") + name + " must be > 0");
    };
    for (const auto& e : kRegistry) {
        // Enthalpies may be negative; everything else must be positive except
        // fractions/yields which additionally must not exceed 1.
        std::string_view k = e.key;
        if (k.substr(0, 3) == "dH_") continue;
        positive(this->*(e.member), e.key);
    }
    auto fraction = [](double v, const char* name) {
        if (v > 1.0) throw ConfigError(std::string("parameter ") + name + " must be <= 1");
    };
    fraction(f_sI_xc, "f_sI_xc");
    fraction(f_xI_xc, "f_xI_xc");
    fraction(f_ch_xc, "f_ch_xc");
    fraction(f_pr_xc, "f_pr_xc");
    fraction(f_li_xc, "f_li_xc");
    fraction(f_fa_li, "f_fa_li");
    fraction(Y_su, "Y_su");
    fraction(Y_aa, "Y_aa");
    fraction(Y_fa, "Y_fa");
    fraction(Y_c4, "Y_c4");
    fraction(Y_pro, "Y_pro");
    fraction(Y_ac, "Y_ac");
    fraction(Y_h2, "Y_h2");
    if (!(pH_LL_aa < pH_UL_aa) || !(pH_LL_ac < pH_UL_ac) || !(pH_LL_h2 < pH_UL_h2))
        throw ConfigError("pH_LL must be < pH_UL for every trophic group");
}

AdmParams AdmParams::make(const ParamSet& base, const Operational& op) {
    base.validate();
    if (!(op.V_liq > 0.0)) throw ConfigError("V_liq must be > 0");
    if (!(op.V_gas > 0.0)) throw ConfigError("V_gas must be > 0");
    if (!(op.T > 0.0)) throw ConfigError("operating temperature must be > 0");
    if (!(op.P_atm > 0.0)) throw ConfigError("atmospheric pressure must be > 0");

    AdmParams p;
    p.base = base;
    p.op = op;

    const double tb = base.T_base, t = op.T, r = base.R_gas;
    p.K_w = vant_hoff(base.K_w_base, base.dH_K_w, tb, t, r);
    p.K_a_co2 = vant_hoff(base.K_a_co2_base, base.dH_K_a_co2, tb, t, r);
    p.K_a_IN = vant_hoff(base.K_a_IN_base, base.dH_K_a_IN, tb, t, r);
    p.K_H_h2 = vant_hoff(base.K_H_h2_base, base.dH_K_H_h2, tb, t, r);
    p.K_H_ch4 = vant_hoff(base.K_H_ch4_base, base.dH_K_H_ch4, tb, t, r);
    p.K_H_co2 = vant_hoff(base.K_H_co2_base, base.dH_K_H_co2, tb, t, r);
    p.p_gas_h2o = base.p_h2o_base * std::exp(base.dH_vap_over_R * (1.0 / tb - 1.0 / t));

    p.ph_lim_aa = std::pow(10.0, -(base.pH_UL_aa + base.pH_LL_aa) / 2.0);
    p.ph_lim_ac = std::pow(10.0, -(base.pH_UL_ac + base.pH_LL_ac) / 2.0);
    p.ph_lim_h2 = std::pow(10.0, -(base.pH_UL_h2 + base.pH_LL_h2) / 2.0);
    p.n_hion_aa = 3.0 / (base.pH_UL_aa - base.pH_LL_aa);
    p.n_hion_ac = 3.0 / (base.pH_UL_ac - base.pH_LL_ac);
    p.n_hion_h2 = 3.0 / (base.pH_UL_h2 - base.pH_LL_h2);
    p.k_ph_aa = (base.pH_LL_aa + base.pH_UL_aa) / 2.0;
    p.k_ph_ac = (base.pH_LL_ac + base.pH_UL_ac) / 2.0;
    p.k_ph_h2 = (base.pH_LL_h2 + base.pH_UL_h2) / 2.0;
    p.k_p_eff = base.k_p * (op.V_gas / base.k_p_ref_v_gas);
    return p;
}

AdmState default_influent() {
    AdmState s;
    s[S_su] = 0.01;
    s[S_aa] = 0.001;
    s[S_fa] = 0.001;
    s[S_va] = 0.001;
    s[S_bu] = 0.001;
    s[S_pro] = 0.001;
    s[S_ac] = 0.001;
    s[S_h2] = 1.0e-8;
    s[S_ch4] = 1.0e-5;
    s[S_IC] = 0.04;
    s[S_IN] = 0.01;
    s[S_I] = 0.02;
    s[X_c] = 2.0;
    s[X_ch] = 5.0;
    s[X_pr] = 20.0;
    s[X_li] = 5.0;
    s[X_su] = 0.0;
    s[X_aa] = 0.01;
    s[X_fa] = 0.01;
    s[X_c4] = 0.01;
    s[X_pro] = 0.01;
    s[X_ac] = 0.01;
    s[X_h2] = 0.01;
    s[X_I] = 25.0;
    s[S_cat] = 0.04;
    s[S_an] = 0.02;
    // ion and gas states enter with the flow as part of their parent totals
    return s;
}

AdmState default_initial_state() {
    AdmState s;
    s[S_su] = 0.012;
    s[S_aa] = 0.0053;
    s[S_fa] = 0.099;
    s[S_va] = 0.012;
    s[S_bu] = 0.013;
    s[S_pro] = 0.016;
    s[S_ac] = 0.20;
    s[S_h2] = 2.3e-7;
    s[S_ch4] = 0.055;
    s[S_IC] = 0.15;
    s[S_IN] = 0.13;
    s[S_I] = 0.33;
    s[X_c] = 0.31;
    s[X_ch] = 0.028;
    s[X_pr] = 0.10;
    s[X_li] = 0.029;
    s[X_su] = 0.42;
    s[X_aa] = 1.18;
    s[X_fa] = 0.24;
    s[X_c4] = 0.43;
    s[X_pro] = 0.14;
    s[X_ac] = 0.76;
    s[X_h2] = 0.32;
    s[X_I] = 25.6;
    s[S_cat] = 0.040;
    s[S_an] = 0.020;
    s[S_va_ion] = 0.011;
    s[S_bu_ion] = 0.013;
    s[S_pro_ion] = 0.016;
    s[S_ac_ion] = 0.20;
    s[S_hco3] = 0.14;
    s[S_nh3] = 0.0041;
    s[S_gas_h2] = 1.02e-5;
    s[S_gas_ch4] = 1.63;
    s[S_gas_co2] = 0.014;
    return s;
}

AdmState load_state_file(const std::filesystem::path& file) {
    SettingsFile f = SettingsFile::parse_file(file);
    AdmState s;
    std::set<std::string> seen;
    for (int i = 0; i < kNumComponents; ++i) {
        const std::string key(kComponentNames[static_cast<std::size_t>(i)]);
        if (f.has(key)) {
            s.y[static_cast<std::size_t>(i)] = f.number(key);
            seen.insert(key);
        }
    }
    for (const auto& k : f.keys())
        if (!seen.count(k))
            throw ParseError(f.name(), f.line_of(k), "unknown component name '" + k + "'");
    for (int i = 0; i < kNumComponents; ++i)
        if (s.y[static_cast<std::size_t>(i)] < 0.0)
            throw ConfigError(file.string() + ": component " +
                              std::string(kComponentNames[static_cast<std::size_t>(i)]) +
                              " is negative");
    return s;
}

void dump_state(const AdmState& s, std::ostream& os) {
    os << "# reactor state: one concentration per line\n";
    for (int i = 0; i < kNumComponents; ++i)
        os << kComponentNames[static_cast<std::size_t>(i)] << " = "
           << fmt17(s.y[static_cast<std::size_t>(i)]) << "\n";
}

} // namespace chad
