#include "chad/kinetics.hpp"

#include <cmath>
#include <string>

namespace chad {

namespace {

// Keeps the valerate/butyrate competition term finite when both vanish.
constexpr double kC4Eps = 1.0e-6;

inline double monod(double s, double ks) { return s / (ks + s); }

// Clamp policy: tiny undershoot is zeroed, real negatives are an error.
inline std::array<double, kNumComponents> clamped_copy(const AdmState& s, double tol,
                                                       RateDiagnostics* diag) {
    std::array<double, kNumComponents> y = s.y;
    for (int i = 0; i < kNumComponents; ++i) {
        double& v = y[static_cast<std::size_t>(i)];
        if (v < 0.0) {
            if (v < -tol)
                throw InvalidStateError("process_rates: component " +
                                        std::string(component_name(static_cast<Component>(i))) +
                                        " negative beyond tolerance: " + std::to_string(v));
            v = 0.0;
            if (diag) ++diag->clamped;
        }
    }
    return y;
}

} // namespace

ProcessRates process_rates(const AdmState& s, const AdmParams& p, RateDiagnostics* diag) {
    const auto y = clamped_copy(s, p.base.negative_tolerance, diag);
    const ParamSet& b = p.base;

    AdmState cs = s; // clamped view for the inhibition factors
    cs.y = y;
    const InhibitionFactors f = InhibitionFactors::compute(cs, p);

    ProcessRates r;
    r.rho[p_disintegration] = b.k_dis * y[X_c];
    r.rho[p_hydrolysis_ch] = b.k_hyd_ch * y[X_ch];
    r.rho[p_hydrolysis_pr] = b.k_hyd_pr * y[X_pr];
    r.rho[p_hydrolysis_li] = b.k_hyd_li * y[X_li];

    r.rho[p_uptake_su] = b.k_m_su * monod(y[S_su], b.K_S_su) * y[X_su] * f.product(UptakeGroup::sugars);
    r.rho[p_uptake_aa] = b.k_m_aa * monod(y[S_aa], b.K_S_aa) * y[X_aa] * f.product(UptakeGroup::amino_acids);
    r.rho[p_uptake_fa] = b.k_m_fa * monod(y[S_fa], b.K_S_fa) * y[X_fa] * f.product(UptakeGroup::lcfa);
    const double c4_sum = y[S_va] + y[S_bu] + kC4Eps;
    r.rho[p_uptake_va] =
        b.k_m_c4 * monod(y[S_va], b.K_S_c4) * y[X_c4] * (y[S_va] / c4_sum) * f.product(UptakeGroup::valerate);
    r.rho[p_uptake_bu] =
        b.k_m_c4 * monod(y[S_bu], b.K_S_c4) * y[X_c4] * (y[S_bu] / c4_sum) * f.product(UptakeGroup::butyrate);
    r.rho[p_uptake_pro] =
        b.k_m_pro * monod(y[S_pro], b.K_S_pro) * y[X_pro] * f.product(UptakeGroup::propionate);
    r.rho[p_uptake_ac] = b.k_m_ac * monod(y[S_ac], b.K_S_ac) * y[X_ac] * f.product(UptakeGroup::acetate);
    r.rho[p_uptake_h2] = b.k_m_h2 * monod(y[S_h2], b.K_S_h2) * y[X_h2] * f.product(UptakeGroup::hydrogen);

    r.rho[p_decay_xsu] = b.k_dec_xsu * y[X_su];
    r.rho[p_decay_xaa] = b.k_dec_xaa * y[X_aa];
    r.rho[p_decay_xfa] = b.k_dec_xfa * y[X_fa];
    r.rho[p_decay_xc4] = b.k_dec_xc4 * y[X_c4];
    r.rho[p_decay_xpro] = b.k_dec_xpro * y[X_pro];
    r.rho[p_decay_xac] = b.k_dec_xac * y[X_ac];
    r.rho[p_decay_xh2] = b.k_dec_xh2 * y[X_h2];

    // Gas-liquid transfer rho_T = kLa (S_liq - K_H p_gas), COD-scaled for H2
    // and CH4 (16 and 64 kgCOD per kmol), molar for CO2.
    const PartialPressures pp = partial_pressures(cs, p);
    const double s_co2 = y[S_IC] - (y[S_hco3] > 0.0 ? y[S_hco3] : 0.0);
    r.t_h2 = b.k_L_a * (y[S_h2] - 16.0 * p.K_H_h2 * pp.h2);
    r.t_ch4 = b.k_L_a * (y[S_ch4] - 64.0 * p.K_H_ch4 * pp.ch4);
    r.t_co2 = b.k_L_a * (s_co2 - p.K_H_co2 * pp.co2);
    return r;
}

std::array<double, kNumComponents> stoichiometric_rhs(const ProcessRates& r, const AdmParams& p) {
    const ParamSet& b = p.base;
    const auto& q = r.rho;

    const double decay_sum = q[p_decay_xsu] + q[p_decay_xaa] + q[p_decay_xfa] + q[p_decay_xc4] +
                             q[p_decay_xpro] + q[p_decay_xac] + q[p_decay_xh2];

    std::array<double, kNumComponents> d{};
    d[S_su] = q[p_hydrolysis_ch] + (1.0 - b.f_fa_li) * q[p_hydrolysis_li] - q[p_uptake_su];
    d[S_aa] = q[p_hydrolysis_pr] - q[p_uptake_aa];
    d[S_fa] = b.f_fa_li * q[p_hydrolysis_li] - q[p_uptake_fa];
    d[S_va] = (1.0 - b.Y_aa) * b.f_va_aa * q[p_uptake_aa] - q[p_uptake_va];
    d[S_bu] = (1.0 - b.Y_su) * b.f_bu_su * q[p_uptake_su] +
              (1.0 - b.Y_aa) * b.f_bu_aa * q[p_uptake_aa] - q[p_uptake_bu];
    d[S_pro] = (1.0 - b.Y_su) * b.f_pro_su * q[p_uptake_su] +
               (1.0 - b.Y_aa) * b.f_pro_aa * q[p_uptake_aa] +
               (1.0 - b.Y_c4) * 0.54 * q[p_uptake_va] - q[p_uptake_pro];
    d[S_ac] = (1.0 - b.Y_su) * b.f_ac_su * q[p_uptake_su] +
              (1.0 - b.Y_aa) * b.f_ac_aa * q[p_uptake_aa] +
              (1.0 - b.Y_fa) * 0.7 * q[p_uptake_fa] + (1.0 - b.Y_c4) * 0.31 * q[p_uptake_va] +
              (1.0 - b.Y_c4) * 0.8 * q[p_uptake_bu] + (1.0 - b.Y_pro) * 0.57 * q[p_uptake_pro] -
              q[p_uptake_ac];
    d[S_h2] = (1.0 - b.Y_su) * b.f_h2_su * q[p_uptake_su] +
              (1.0 - b.Y_aa) * b.f_h2_aa * q[p_uptake_aa] +
              (1.0 - b.Y_fa) * 0.3 * q[p_uptake_fa] + (1.0 - b.Y_c4) * 0.15 * q[p_uptake_va] +
              (1.0 - b.Y_c4) * 0.2 * q[p_uptake_bu] + (1.0 - b.Y_pro) * 0.43 * q[p_uptake_pro] -
              q[p_uptake_h2];
    d[S_ch4] = (1.0 - b.Y_ac) * q[p_uptake_ac] + (1.0 - b.Y_h2) * q[p_uptake_h2];

    // Inorganic carbon closes the per-process carbon balance.
    const double c1 = -b.C_xc + b.f_sI_xc * b.C_sI + b.f_ch_xc * b.C_ch + b.f_pr_xc * b.C_pr +
                      b.f_li_xc * b.C_li + b.f_xI_xc * b.C_xI;
    const double c2 = -b.C_ch + b.C_su;
    const double c3 = -b.C_pr + b.C_aa;
    const double c4 = -b.C_li + (1.0 - b.f_fa_li) * b.C_su + b.f_fa_li * b.C_fa;
    const double c5 = -b.C_su +
                      (1.0 - b.Y_su) * (b.f_bu_su * b.C_bu + b.f_pro_su * b.C_pro + b.f_ac_su * b.C_ac) +
                      b.Y_su * b.C_bac;
    const double c6 = -b.C_aa +
                      (1.0 - b.Y_aa) * (b.f_va_aa * b.C_va + b.f_bu_aa * b.C_bu +
                                        b.f_pro_aa * b.C_pro + b.f_ac_aa * b.C_ac) +
                      b.Y_aa * b.C_bac;
    const double c7 = -b.C_fa + (1.0 - b.Y_fa) * 0.7 * b.C_ac + b.Y_fa * b.C_bac;
    const double c8 = -b.C_va + (1.0 - b.Y_c4) * 0.54 * b.C_pro + (1.0 - b.Y_c4) * 0.31 * b.C_ac +
                      b.Y_c4 * b.C_bac;
    const double c9 = -b.C_bu + (1.0 - b.Y_c4) * 0.8 * b.C_ac + b.Y_c4 * b.C_bac;
    const double c10 = -b.C_pro + (1.0 - b.Y_pro) * 0.57 * b.C_ac + b.Y_pro * b.C_bac;
    const double c11 = -b.C_ac + (1.0 - b.Y_ac) * b.C_ch4 + b.Y_ac * b.C_bac;
    const double c12 = (1.0 - b.Y_h2) * b.C_ch4 + b.Y_h2 * b.C_bac;
    const double c13 = -b.C_bac + b.C_xc;
    d[S_IC] = -(c1 * q[p_disintegration] + c2 * q[p_hydrolysis_ch] + c3 * q[p_hydrolysis_pr] +
                c4 * q[p_hydrolysis_li] + c5 * q[p_uptake_su] + c6 * q[p_uptake_aa] +
                c7 * q[p_uptake_fa] + c8 * q[p_uptake_va] + c9 * q[p_uptake_bu] +
                c10 * q[p_uptake_pro] + c11 * q[p_uptake_ac] + c12 * q[p_uptake_h2] +
                c13 * decay_sum);

    d[S_IN] = (b.N_xc - b.f_xI_xc * b.N_I - b.f_sI_xc * b.N_I - b.f_pr_xc * b.N_aa) *
                  q[p_disintegration] -
              b.Y_su * b.N_bac * q[p_uptake_su] + (b.N_aa - b.Y_aa * b.N_bac) * q[p_uptake_aa] -
              b.Y_fa * b.N_bac * q[p_uptake_fa] - b.Y_c4 * b.N_bac * q[p_uptake_va] -
              b.Y_c4 * b.N_bac * q[p_uptake_bu] - b.Y_pro * b.N_bac * q[p_uptake_pro] -
              b.Y_ac * b.N_bac * q[p_uptake_ac] - b.Y_h2 * b.N_bac * q[p_uptake_h2] +
              (b.N_bac - b.N_xc) * decay_sum;

    d[S_I] = b.f_sI_xc * q[p_disintegration];
    d[X_c] = -q[p_disintegration] + decay_sum;
    d[X_ch] = b.f_ch_xc * q[p_disintegration] - q[p_hydrolysis_ch];
    d[X_pr] = b.f_pr_xc * q[p_disintegration] - q[p_hydrolysis_pr];
    d[X_li] = b.f_li_xc * q[p_disintegration] - q[p_hydrolysis_li];
    d[X_su] = b.Y_su * q[p_uptake_su] - q[p_decay_xsu];
    d[X_aa] = b.Y_aa * q[p_uptake_aa] - q[p_decay_xaa];
    d[X_fa] = b.Y_fa * q[p_uptake_fa] - q[p_decay_xfa];
    d[X_c4] = b.Y_c4 * q[p_uptake_va] + b.Y_c4 * q[p_uptake_bu] - q[p_decay_xc4];
    d[X_pro] = b.Y_pro * q[p_uptake_pro] - q[p_decay_xpro];
    d[X_ac] = b.Y_ac * q[p_uptake_ac] - q[p_decay_xac];
    d[X_h2] = b.Y_h2 * q[p_uptake_h2] - q[p_decay_xh2];
    d[X_I] = b.f_xI_xc * q[p_disintegration];
    return d;
}

StoichMatrix stoich_matrix(const AdmParams& p) {
    StoichMatrix m;
    // One unit rate on each process in turn recovers that matrix row.
    for (int j = 0; j < kNumProcesses; ++j) {
        ProcessRates unit;
        unit.rho[static_cast<std::size_t>(j)] = 1.0;
        m.nu[static_cast<std::size_t>(j)] = stoichiometric_rhs(unit, p);
    }
    return m;
}

PartialPressures partial_pressures(const AdmState& s, const AdmParams& p) {
    const double rt = p.base.R_gas * p.op.T;
    PartialPressures pp;
    pp.h2 = s[S_gas_h2] * rt / 16.0;
    pp.ch4 = s[S_gas_ch4] * rt / 64.0;
    pp.co2 = s[S_gas_co2] * rt;
    pp.h2o = p.p_gas_h2o;
    return pp;
}

GasPhaseRhs gas_phase_rhs(const AdmState& s, const ProcessRates& r, const AdmParams& p) {
    const PartialPressures pp = partial_pressures(s, p);
    GasPhaseRhs g;
    const double over = pp.total() - p.op.P_atm;
    g.q_gas = over > 0.0 ? p.k_p_eff * over : 0.0;
    const double vratio = p.op.V_liq / p.op.V_gas;
    const double dil = g.q_gas / p.op.V_gas;
    g.d_gas_h2 = -s[S_gas_h2] * dil + r.t_h2 * vratio;
    g.d_gas_ch4 = -s[S_gas_ch4] * dil + r.t_ch4 * vratio;
    g.d_gas_co2 = -s[S_gas_co2] * dil + r.t_co2 * vratio;
    return g;
}

std::array<double, 6> acid_base_rates(const AdmState& s, const AdmParams& p) {
    const ParamSet& b = p.base;
    const double sh = s.s_h;
    std::array<double, 6> a{};
    a[0] = b.k_A_B * (s[S_va_ion] * (b.K_a_va + sh) - b.K_a_va * s[S_va]);
    a[1] = b.k_A_B * (s[S_bu_ion] * (b.K_a_bu + sh) - b.K_a_bu * s[S_bu]);
    a[2] = b.k_A_B * (s[S_pro_ion] * (b.K_a_pro + sh) - b.K_a_pro * s[S_pro]);
    a[3] = b.k_A_B * (s[S_ac_ion] * (b.K_a_ac + sh) - b.K_a_ac * s[S_ac]);
    a[4] = b.k_A_B * (s[S_hco3] * (p.K_a_co2 + sh) - p.K_a_co2 * s[S_IC]);
    a[5] = b.k_A_B * (s[S_nh3] * (p.K_a_IN + sh) - p.K_a_IN * s[S_IN]);
    return a;
}

IonStates ion_states_at(double s_h, const AdmState& s, const AdmParams& p) {
    const ParamSet& b = p.base;
    IonStates i;
    i.va = b.K_a_va * s[S_va] / (b.K_a_va + s_h);
    i.bu = b.K_a_bu * s[S_bu] / (b.K_a_bu + s_h);
    i.pro = b.K_a_pro * s[S_pro] / (b.K_a_pro + s_h);
    i.ac = b.K_a_ac * s[S_ac] / (b.K_a_ac + s_h);
    i.hco3 = p.K_a_co2 * s[S_IC] / (p.K_a_co2 + s_h);
    i.nh3 = p.K_a_IN * s[S_IN] / (p.K_a_IN + s_h);
    return i;
}

} // namespace chad
