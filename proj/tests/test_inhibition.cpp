#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "chad/inhibition.hpp"

using namespace chad;

namespace {
const Operational kOp{3400.0, 300.0, 308.5, 1.013};
}

TEST_CASE("hill inhibition: midpoint and frozen value") {
    // midpoint of (4, 5.5) is 4.75; the factor there is exactly one half
    CHECK(hill_inhibition(4.75, 4.0, 5.5, 3.0) == 0.5);
    CHECK(hill_inhibition(4.75, 4.0, 5.5, 1.7) == 0.5);
    // frozen from a 40-digit evaluation of 7^3 / (7^3 + 4.75^3)
    CHECK(hill_inhibition(7.0, 4.0, 5.5, 3.0) ==
          doctest::Approx(0.76193120683072437611).epsilon(1e-15));
}

TEST_CASE("hill inhibition: limits and monotonicity") {
    CHECK(hill_inhibition(1e-6, 4.0, 5.5, 3.0) < 1e-15);
    CHECK(hill_inhibition(1e6, 4.0, 5.5, 3.0) > 1.0 - 1e-9);
    double prev = -1.0;
    for (double ph = 0.5; ph < 14.0; ph += 0.25) {
        const double v = hill_inhibition(ph, 6.0, 7.0, 3.0);
        CHECK(v > prev);
        CHECK(v >= 0.0);
        CHECK(v <= 1.0);
        prev = v;
    }
}

TEST_CASE("hill inhibition: domain errors") {
    CHECK_THROWS_AS(hill_inhibition(0.0, 4.0, 5.5, 3.0), std::domain_error);
    CHECK_THROWS_AS(hill_inhibition(-1.0, 4.0, 5.5, 3.0), std::domain_error);
    CHECK_THROWS_AS(hill_inhibition(7.0, 5.5, 4.0, 3.0), std::domain_error);
    CHECK_THROWS_AS(hill_inhibition(7.0, 4.0, 5.5, 0.0), std::domain_error);
}

TEST_CASE("hydrogen-ion hill form: half point and pH monotonicity") {
    const double lim = std::pow(10.0, -(5.5 + 4.0) / 2.0);
    CHECK(hill_inhibition_hplus(lim, 4.0, 5.5) == 0.5);
    // increasing pH means decreasing S_H+, and the factor rises towards 1
    CHECK(hill_inhibition_hplus(1e-2, 4.0, 5.5) < 1e-4);
    CHECK(hill_inhibition_hplus(1e-12, 4.0, 5.5) > 1.0 - 1e-9);
    double prev = -1.0;
    for (double sh = 1e-2; sh > 1e-12; sh /= 2.0) {
        // falling S_H+ is rising pH: the factor climbs towards 1
        const double v = hill_inhibition_hplus(sh, 6.0, 7.0);
        CHECK(v >= prev - 1e-15);
        prev = v;
    }
    CHECK_THROWS_AS(hill_inhibition_hplus(0.0, 4.0, 5.5), std::domain_error);
}

TEST_CASE("noncompetitive inhibition: fixed points") {
    CHECK(noncompetitive_inhibition(0.0, 2.0) == 1.0);
    CHECK(noncompetitive_inhibition(2.0, 2.0) == 0.5);
    CHECK(noncompetitive_inhibition(6.0, 2.0) == 0.25);
    CHECK_THROWS_AS(noncompetitive_inhibition(1.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(noncompetitive_inhibition(-1.0, 1.0), std::domain_error);
}

TEST_CASE("substrate limitation: fixed points") {
    CHECK(substrate_limitation(0.0, 3.0) == 0.0);
    CHECK(substrate_limitation(3.0, 3.0) == 0.5);
    CHECK(substrate_limitation(27.0, 3.0) == 0.9);
    CHECK_THROWS_AS(substrate_limitation(1.0, -1.0), std::domain_error);
}

TEST_CASE("randomized property sweep: range, half points, monotonic direction") {
    std::mt19937_64 rng(20240917);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    for (int k = 0; k < 2000; ++k) {
        const double k_i = 1e-6 + 10.0 * uni(rng);
        const double a = 20.0 * uni(rng), b = 20.0 * uni(rng);
        const double lo = std::min(a, b), hi = std::max(a, b) + 1e-9;

        CHECK(noncompetitive_inhibition(k_i, k_i) == 0.5);
        CHECK(substrate_limitation(k_i, k_i) == 0.5);

        const double n1 = noncompetitive_inhibition(lo, k_i);
        const double n2 = noncompetitive_inhibition(hi, k_i);
        CHECK(n1 >= n2);
        CHECK(n2 > 0.0);
        CHECK(n1 <= 1.0);

        const double s1 = substrate_limitation(lo, k_i);
        const double s2 = substrate_limitation(hi, k_i);
        CHECK(s1 <= s2);
        CHECK(s1 >= 0.0);
        CHECK(s2 < 1.0);

        const double ll = 2.0 + 8.0 * uni(rng);
        const double ul = ll + 0.25 + 3.0 * uni(rng);
        const double n = 0.5 + 5.0 * uni(rng);
        const double kph = (ll + ul) / 2.0;
        CHECK(hill_inhibition(kph, ll, ul, n) == 0.5);
        const double p1 = hill_inhibition(std::max(lo, 1e-3), ll, ul, n);
        const double p2 = hill_inhibition(std::max(hi, 2e-3), ll, ul, n);
        if (std::max(lo, 1e-3) < std::max(hi, 2e-3)) CHECK(p1 <= p2);
    }
}

TEST_CASE("total inhibition: clear conditions approach one, nitrogen starves to zero") {
    const AdmParams p = AdmParams::make(ParamSet::defaults(), kOp);
    AdmState s;
    s.s_h = 1e-9; // pH 9, far above every upper limit
    s[S_IN] = 1.0; // >> K_S_IN = 1e-4
    for (UptakeGroup g : {UptakeGroup::sugars, UptakeGroup::lcfa, UptakeGroup::acetate,
                          UptakeGroup::hydrogen})
        CHECK(total_inhibition(g, s, p) > 0.99);

    s[S_IN] = 0.0;
    CHECK(total_inhibition(UptakeGroup::sugars, s, p) == 0.0);
    CHECK(total_inhibition(UptakeGroup::acetate, s, p) == 0.0);
}

TEST_CASE("total inhibition equals the product of individually evaluated factors") {
    const ParamSet b = ParamSet::defaults();
    const AdmParams p = AdmParams::make(b, kOp);
    AdmState s;
    s.s_h = std::pow(10.0, -6.2); // mid-range pH
    s[S_IN] = 2.5e-4;
    s[S_h2] = 4.0e-6;
    s[S_nh3] = 9.0e-4;

    const double i_ph_aa = hill_inhibition_hplus(s.s_h, b.pH_LL_aa, b.pH_UL_aa);
    const double i_ph_ac = hill_inhibition_hplus(s.s_h, b.pH_LL_ac, b.pH_UL_ac);
    const double i_ph_h2 = hill_inhibition_hplus(s.s_h, b.pH_LL_h2, b.pH_UL_h2);
    const double i_in = substrate_limitation(s[S_IN], b.K_S_IN);
    const double i_fa = noncompetitive_inhibition(s[S_h2], b.K_I_h2_fa);
    const double i_c4 = noncompetitive_inhibition(s[S_h2], b.K_I_h2_c4);
    const double i_pro = noncompetitive_inhibition(s[S_h2], b.K_I_h2_pro);
    const double i_nh3 = noncompetitive_inhibition(s[S_nh3], b.K_I_nh3);

    CHECK(total_inhibition(UptakeGroup::sugars, s, p) ==
          doctest::Approx(i_ph_aa * i_in).epsilon(1e-14));
    CHECK(total_inhibition(UptakeGroup::lcfa, s, p) ==
          doctest::Approx(i_ph_aa * i_in * i_fa).epsilon(1e-14));
    CHECK(total_inhibition(UptakeGroup::valerate, s, p) ==
          doctest::Approx(i_ph_aa * i_in * i_c4).epsilon(1e-14));
    CHECK(total_inhibition(UptakeGroup::butyrate, s, p) ==
          doctest::Approx(i_ph_aa * i_in * i_c4).epsilon(1e-14));
    CHECK(total_inhibition(UptakeGroup::propionate, s, p) ==
          doctest::Approx(i_ph_aa * i_in * i_pro).epsilon(1e-14));
    CHECK(total_inhibition(UptakeGroup::acetate, s, p) ==
          doctest::Approx(i_ph_ac * i_in * i_nh3).epsilon(1e-14));
    CHECK(total_inhibition(UptakeGroup::hydrogen, s, p) ==
          doctest::Approx(i_ph_h2 * i_in).epsilon(1e-14));
}

TEST_CASE("pH-domain variant is selectable and uses the configured exponents") {
    ParamSet b = ParamSet::defaults();
    b.ph_form = PhInhibitionForm::ph;
    const AdmParams p = AdmParams::make(b, kOp);
    AdmState s;
    s.s_h = std::pow(10.0, -5.2);
    s[S_IN] = 1.0;
    const double expected =
        hill_inhibition(s.ph(), b.pH_LL_aa, b.pH_UL_aa, b.hill_n_aa) *
        substrate_limitation(1.0, b.K_S_IN);
    CHECK(total_inhibition(UptakeGroup::sugars, s, p) == doctest::Approx(expected).epsilon(1e-14));
}
