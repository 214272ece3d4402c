#include "chad/charge_balance.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace chad {

namespace {

// Search bracket for the proton concentration; generous enough for any
// physically meaningful ion loading (pH -3 .. 18).
constexpr double kShLo = 1.0e-18;
constexpr double kShHi = 1.0e3;

inline double sq(double x) { return x * x; }

} // namespace

double charge_balance_residual(double s_h, const AdmState& s, const AdmParams& p) {
    if (!(s_h > 0.0)) throw std::domain_error("charge_balance_residual: S_H+ must be > 0");
    const ParamSet& b = p.base;
    const double nh4 = s[S_IN] * s_h / (p.K_a_IN + s_h);
    const double hco3 = p.K_a_co2 * s[S_IC] / (p.K_a_co2 + s_h);
    const double ac = b.K_a_ac * s[S_ac] / (b.K_a_ac + s_h);
    const double pro = b.K_a_pro * s[S_pro] / (b.K_a_pro + s_h);
    const double bu = b.K_a_bu * s[S_bu] / (b.K_a_bu + s_h);
    const double va = b.K_a_va * s[S_va] / (b.K_a_va + s_h);
    return s[S_cat] + nh4 + s_h - hco3 - ac / 64.0 - pro / 112.0 - bu / 160.0 - va / 208.0 -
           p.K_w / s_h - s[S_an];
}

double charge_balance_gradient(double s_h, const AdmState& s, const AdmParams& p) {
    if (!(s_h > 0.0)) throw std::domain_error("charge_balance_gradient: S_H+ must be > 0");
    const ParamSet& b = p.base;
    return 1.0 + p.K_a_IN * s[S_IN] / sq(p.K_a_IN + s_h) +
           p.K_a_co2 * s[S_IC] / sq(p.K_a_co2 + s_h) +
           b.K_a_ac * s[S_ac] / (64.0 * sq(b.K_a_ac + s_h)) +
           b.K_a_pro * s[S_pro] / (112.0 * sq(b.K_a_pro + s_h)) +
           b.K_a_bu * s[S_bu] / (160.0 * sq(b.K_a_bu + s_h)) +
           b.K_a_va * s[S_va] / (208.0 * sq(b.K_a_va + s_h)) + p.K_w / sq(s_h);
}

SolveStats solve_proton(AdmState& s, const AdmParams& p, const NewtonConfig& cfg) {
    double x;
    switch (cfg.initial_guess) {
    case NewtonConfig::Guess::neutral_ph:
        x = 1.0e-7;
        break;
    case NewtonConfig::Guess::midpoint:
        x = std::sqrt(kShLo * kShHi);
        break;
    case NewtonConfig::Guess::previous_value:
    default:
        x = s.s_h > 0.0 ? s.s_h : 1.0e-7;
        break;
    }
    if (x <= kShLo || x >= kShHi) x = 1.0e-7;

    double lo = kShLo, hi = kShHi;
    SolveStats st;
    std::vector<double> trace;
    while (st.iterations < cfg.max_iterations) {
        double e = charge_balance_residual(x, s, p);
        ++st.iterations;
        trace.push_back(x);
        if (std::abs(e) <= cfg.absolute_tolerance) {
            // Polish onto the machine-precision root so independent solvers
            // land on the same value: keep taking Newton steps while the
            // residual magnitude still shrinks.
            for (int extra = 0; extra < 4 && st.iterations < cfg.max_iterations; ++extra) {
                const double next = x - e / charge_balance_gradient(x, s, p);
                if (!(next > 0.0) || next == x) break;
                const double en = charge_balance_residual(next, s, p);
                ++st.iterations;
                if (std::abs(en) >= std::abs(e)) break;
                x = next;
                e = en;
            }
            st.residual = e;
            s.s_h = x;
            const IonStates ions = ion_states_at(x, s, p);
            s[S_va_ion] = ions.va;
            s[S_bu_ion] = ions.bu;
            s[S_pro_ion] = ions.pro;
            s[S_ac_ion] = ions.ac;
            s[S_hco3] = ions.hco3;
            s[S_nh3] = ions.nh3;
            return st;
        }
        // E is increasing: the root lies below positive residuals.
        if (e > 0.0)
            hi = x;
        else
            lo = x;
        const double g = charge_balance_gradient(x, s, p);
        double next = x - e / g;
        if (!(next > lo) || !(next < hi)) {
            next = std::sqrt(lo * hi); // safeguarded logarithmic bisection
            ++st.bisections;
        }
        if (next == x) {
            // Bracket exhausted at machine precision without meeting the
            // residual tolerance; treated as non-convergence below.
            break;
        }
        x = next;
    }
    throw SolverError("solve_proton: no convergence to |E| <= " +
                          std::to_string(cfg.absolute_tolerance) + " within " +
                          std::to_string(cfg.max_iterations) + " iterations",
                      trace);
}

namespace {

// S_h2-independent prefactors of the hydrogen balance. The production terms
// keep their pH/nitrogen factors (fixed during the scalar solve) and shed
// only the hydrogen-inhibition factor, which is re-applied per candidate.
struct Sh2Terms {
    double dil = 0;      // q_in / V_liq
    double sh2_in = 0;
    double prod_const = 0;      // sugar + amino-acid H2 yield (no S_h2 dependence)
    double a_fa = 0, a_va = 0, a_bu = 0, a_pro = 0; // yield-weighted base rates
    double u_h2 = 0;     // k_m_h2 * X_h2 * I_pH_h2 * I_IN (Monod applied per candidate)
    double gas_sat = 0;  // 16 K_H_h2 p_gas_h2
    double k_l_a = 0;

    double residual(double x, const AdmParams& p, double* scale = nullptr) const {
        const ParamSet& b = p.base;
        const double t_dil = dil * (sh2_in - x);
        const double t_fa = a_fa / (1.0 + x / b.K_I_h2_fa);
        const double t_c4 = (a_va + a_bu) / (1.0 + x / b.K_I_h2_c4);
        const double t_pro = a_pro / (1.0 + x / b.K_I_h2_pro);
        const double t_up = u_h2 * x / (b.K_S_h2 + x);
        const double t_gas = k_l_a * (x - gas_sat);
        if (scale)
            *scale = std::abs(t_dil) + prod_const + t_fa + t_c4 + t_pro + std::abs(t_up) +
                     std::abs(t_gas);
        return t_dil + prod_const + t_fa + t_c4 + t_pro - t_up - t_gas;
    }

    // Always negative: the balance is strictly decreasing in S_h2.
    double gradient(double x, const AdmParams& p) const {
        const ParamSet& b = p.base;
        return -dil - a_fa / (b.K_I_h2_fa * sq(1.0 + x / b.K_I_h2_fa)) -
               (a_va + a_bu) / (b.K_I_h2_c4 * sq(1.0 + x / b.K_I_h2_c4)) -
               a_pro / (b.K_I_h2_pro * sq(1.0 + x / b.K_I_h2_pro)) -
               u_h2 * b.K_S_h2 / sq(b.K_S_h2 + x) - k_l_a;
    }
};

Sh2Terms make_sh2_terms(const AdmState& s, const AdmState& inflow, double q_in,
                        const AdmParams& p) {
    const ParamSet& b = p.base;
    const InhibitionFactors f = InhibitionFactors::compute(s, p);
    const double i_base_aa = f.i_ph_aa * f.i_in_lim;

    auto pos = [](double v) { return v > 0.0 ? v : 0.0; };
    const double s_su = pos(s[S_su]), s_aa_c = pos(s[S_aa]), s_fa_c = pos(s[S_fa]);
    const double s_va_c = pos(s[S_va]), s_bu_c = pos(s[S_bu]), s_pro_c = pos(s[S_pro]);

    Sh2Terms t;
    t.dil = q_in / p.op.V_liq;
    t.sh2_in = inflow[S_h2];
    t.k_l_a = b.k_L_a;
    t.gas_sat = 16.0 * p.K_H_h2 * partial_pressures(s, p).h2;

    const double rho_su = b.k_m_su * s_su / (b.K_S_su + s_su) * pos(s[X_su]) * i_base_aa;
    const double rho_aa = b.k_m_aa * s_aa_c / (b.K_S_aa + s_aa_c) * pos(s[X_aa]) * i_base_aa;
    t.prod_const = (1.0 - b.Y_su) * b.f_h2_su * rho_su + (1.0 - b.Y_aa) * b.f_h2_aa * rho_aa;

    const double c4_sum = s_va_c + s_bu_c + 1.0e-6;
    t.a_fa = (1.0 - b.Y_fa) * 0.3 * b.k_m_fa * s_fa_c / (b.K_S_fa + s_fa_c) * pos(s[X_fa]) *
             i_base_aa;
    t.a_va = (1.0 - b.Y_c4) * 0.15 * b.k_m_c4 * s_va_c / (b.K_S_c4 + s_va_c) * pos(s[X_c4]) *
             (s_va_c / c4_sum) * i_base_aa;
    t.a_bu = (1.0 - b.Y_c4) * 0.2 * b.k_m_c4 * s_bu_c / (b.K_S_c4 + s_bu_c) * pos(s[X_c4]) *
             (s_bu_c / c4_sum) * i_base_aa;
    t.a_pro = (1.0 - b.Y_pro) * 0.43 * b.k_m_pro * s_pro_c / (b.K_S_pro + s_pro_c) *
              pos(s[X_pro]) * i_base_aa;
    t.u_h2 = b.k_m_h2 * pos(s[X_h2]) * f.i_ph_h2 * f.i_in_lim;
    return t;
}

} // namespace

SolveStats solve_sh2(AdmState& s, const AdmState& inflow, double q_in, const AdmParams& p,
                     const NewtonConfig& cfg) {
    if (q_in < 0.0) throw ConfigError("solve_sh2: q_in must be >= 0");
    const Sh2Terms t = make_sh2_terms(s, inflow, q_in, p);

    // r(0) >= 0 and r is strictly decreasing, so the root is bracketed by
    // [0, hi] once r(hi) < 0.
    double lo = 0.0;
    double hi = s[S_h2] > 1.0e-12 ? 4.0 * s[S_h2] : 1.0e-6;
    SolveStats st;
    while (t.residual(hi, p) > 0.0) {
        hi *= 4.0;
        if (++st.bisections > 200)
            throw SolverError("solve_sh2: failed to bracket the root", {hi});
    }

    double x = s.y[S_h2] > 0.0 ? s.y[S_h2] : 0.0;
    if (x >= hi) x = 0.5 * hi;
    std::vector<double> trace;
    while (st.iterations < cfg.max_iterations) {
        double scale = 0.0;
        const double r = t.residual(x, p, &scale);
        ++st.iterations;
        trace.push_back(x);
        const double tol =
            std::max(cfg.absolute_tolerance, cfg.relative_tolerance * std::max(scale, 1.0));
        if (std::abs(r) <= tol) {
            st.residual = r;
            s.y[S_h2] = x;
            return st;
        }
        if (r > 0.0)
            lo = x; // decreasing residual: positive means root is above
        else
            hi = x;
        double next = x - r / t.gradient(x, p);
        if (!(next > lo) || !(next < hi)) {
            next = 0.5 * (lo + hi);
            ++st.bisections;
        }
        if (next == x) break;
        x = next;
    }
    throw SolverError("solve_sh2: no convergence within " + std::to_string(cfg.max_iterations) +
                          " iterations",
                      trace);
}

void apply_proton_quadratic(AdmState& s, const AdmParams& p) {
    // With integrated ion states the balance collapses to
    //   S_H^2 + theta S_H - K_w = 0.
    const double theta = s[S_cat] + (s[S_IN] - s[S_nh3]) - s[S_hco3] - s[S_ac_ion] / 64.0 -
                         s[S_pro_ion] / 112.0 - s[S_bu_ion] / 160.0 - s[S_va_ion] / 208.0 -
                         s[S_an];
    s.s_h = 0.5 * (-theta + std::sqrt(theta * theta + 4.0 * p.K_w));
}

} // namespace chad
