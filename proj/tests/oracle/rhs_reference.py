#!/usr/bin/env python3
"""Independent reference evaluation of the digester right-hand side.

Reads the same parameter/state files as the C++ engine, resolves the
algebraic subsystem (charge balance and soluble hydrogen) by bisection, and
prints the full derivative vector plus diagnostics as `name = value` lines.
Used to freeze expected values for the unit tests; deliberately written
against the published model equations with no code shared with the engine.

Usage:
  rhs_reference.py PARAMS INFLUENT STATE V_LIQ V_GAS Q T P_ATM
"""

import math
import sys

COMPONENTS = [
    "S_su", "S_aa", "S_fa", "S_va", "S_bu", "S_pro", "S_ac", "S_h2", "S_ch4",
    "S_IC", "S_IN", "S_I", "X_c", "X_ch", "X_pr", "X_li", "X_su", "X_aa",
    "X_fa", "X_c4", "X_pro", "X_ac", "X_h2", "X_I", "S_cat", "S_an",
    "S_va_ion", "S_bu_ion", "S_pro_ion", "S_ac_ion", "S_hco3", "S_nh3",
    "S_gas_h2", "S_gas_ch4", "S_gas_co2",
]


def read_kv(path):
    out = {}
    with open(path) as f:
        for line in f:
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            key, _, value = line.partition("=")
            out[key.strip()] = value.strip()
    return out


def bisect(f, lo, hi, iters=500):
    flo = f(lo)
    for _ in range(iters):
        mid = math.sqrt(lo * hi) if lo > 0 else 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break  # interval exhausted at machine precision
        fm = f(mid)
        if fm == 0.0:
            return mid
        if (fm > 0) == (flo > 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return math.sqrt(lo * hi) if lo > 0 else 0.5 * (lo + hi)


def main():
    params_file, influent_file, state_file = sys.argv[1:4]
    v_liq, v_gas, q, t_op, p_atm = (float(x) for x in sys.argv[4:9])

    p = {k: (v if not v.replace(".", "").replace("-", "").replace("+", "")
             .replace("e", "").isdigit() else float(v))
         for k, v in read_kv(params_file).items()}
    for k, v in list(p.items()):
        try:
            p[k] = float(v)
        except ValueError:
            pass
    inflow = {k: float(v) for k, v in read_kv(influent_file).items()}
    state = {k: float(v) for k, v in read_kv(state_file).items()}

    # temperature corrections
    t_base = p["T_base"]
    r = p["R_gas"]
    factor = (1.0 / t_base - 1.0 / t_op) / (100.0 * r)
    k_w = p["K_w_base"] * math.exp(p["dH_K_w"] * factor)
    k_a_co2 = p["K_a_co2_base"] * math.exp(p["dH_K_a_co2"] * factor)
    k_a_in = p["K_a_IN_base"] * math.exp(p["dH_K_a_IN"] * factor)
    k_h_h2 = p["K_H_h2_base"] * math.exp(p["dH_K_H_h2"] * factor)
    k_h_ch4 = p["K_H_ch4_base"] * math.exp(p["dH_K_H_ch4"] * factor)
    k_h_co2 = p["K_H_co2_base"] * math.exp(p["dH_K_H_co2"] * factor)
    p_h2o = p["p_h2o_base"] * math.exp(p["dH_vap_over_R"] * (1.0 / t_base - 1.0 / t_op))

    s = dict(state)

    # charge balance root by log-domain bisection
    def charge(sh):
        nh4 = s["S_IN"] * sh / (k_a_in + sh)
        hco3 = k_a_co2 * s["S_IC"] / (k_a_co2 + sh)
        ac = p["K_a_ac"] * s["S_ac"] / (p["K_a_ac"] + sh)
        pro = p["K_a_pro"] * s["S_pro"] / (p["K_a_pro"] + sh)
        bu = p["K_a_bu"] * s["S_bu"] / (p["K_a_bu"] + sh)
        va = p["K_a_va"] * s["S_va"] / (p["K_a_va"] + sh)
        return (s["S_cat"] + nh4 + sh - hco3 - ac / 64.0 - pro / 112.0 -
                bu / 160.0 - va / 208.0 - k_w / sh - s["S_an"])

    sh = bisect(lambda x: -charge(x), 1e-18, 1e3)  # bisect expects f(lo) > 0
    s["S_va_ion"] = p["K_a_va"] * s["S_va"] / (p["K_a_va"] + sh)
    s["S_bu_ion"] = p["K_a_bu"] * s["S_bu"] / (p["K_a_bu"] + sh)
    s["S_pro_ion"] = p["K_a_pro"] * s["S_pro"] / (p["K_a_pro"] + sh)
    s["S_ac_ion"] = p["K_a_ac"] * s["S_ac"] / (p["K_a_ac"] + sh)
    s["S_hco3"] = k_a_co2 * s["S_IC"] / (k_a_co2 + sh)
    s["S_nh3"] = k_a_in * s["S_IN"] / (k_a_in + sh)

    # pH inhibition (hydrogen-ion Hill form), nitrogen/h2/nh3 factors
    def hill(ph_ll, ph_ul, sh_val):
        lim = 10.0 ** (-(ph_ul + ph_ll) / 2.0)
        n = 3.0 / (ph_ul - ph_ll)
        return lim ** n / (sh_val ** n + lim ** n)

    def factors(s_h2):
        i_ph_aa = hill(p["pH_LL_aa"], p["pH_UL_aa"], sh)
        i_ph_ac = hill(p["pH_LL_ac"], p["pH_UL_ac"], sh)
        i_ph_h2 = hill(p["pH_LL_h2"], p["pH_UL_h2"], sh)
        i_in = s["S_IN"] / (s["S_IN"] + p["K_S_IN"])
        i_h2_fa = 1.0 / (1.0 + s_h2 / p["K_I_h2_fa"])
        i_h2_c4 = 1.0 / (1.0 + s_h2 / p["K_I_h2_c4"])
        i_h2_pro = 1.0 / (1.0 + s_h2 / p["K_I_h2_pro"])
        i_nh3 = 1.0 / (1.0 + s["S_nh3"] / p["K_I_nh3"])
        return i_ph_aa, i_ph_ac, i_ph_h2, i_in, i_h2_fa, i_h2_c4, i_h2_pro, i_nh3

    p_gas_h2 = s["S_gas_h2"] * r * t_op / 16.0

    def rates(s_h2):
        f_aa, f_ac2, f_h2g, i_in, ih_fa, ih_c4, ih_pro, i_nh3 = factors(s_h2)
        rho = [0.0] * 19
        rho[0] = p["k_dis"] * s["X_c"]
        rho[1] = p["k_hyd_ch"] * s["X_ch"]
        rho[2] = p["k_hyd_pr"] * s["X_pr"]
        rho[3] = p["k_hyd_li"] * s["X_li"]
        rho[4] = p["k_m_su"] * s["S_su"] / (p["K_S_su"] + s["S_su"]) * s["X_su"] * f_aa * i_in
        rho[5] = p["k_m_aa"] * s["S_aa"] / (p["K_S_aa"] + s["S_aa"]) * s["X_aa"] * f_aa * i_in
        rho[6] = (p["k_m_fa"] * s["S_fa"] / (p["K_S_fa"] + s["S_fa"]) * s["X_fa"] *
                  f_aa * i_in * ih_fa)
        c4 = s["S_va"] + s["S_bu"] + 1e-6
        rho[7] = (p["k_m_c4"] * s["S_va"] / (p["K_S_c4"] + s["S_va"]) * s["X_c4"] *
                  s["S_va"] / c4 * f_aa * i_in * ih_c4)
        rho[8] = (p["k_m_c4"] * s["S_bu"] / (p["K_S_c4"] + s["S_bu"]) * s["X_c4"] *
                  s["S_bu"] / c4 * f_aa * i_in * ih_c4)
        rho[9] = (p["k_m_pro"] * s["S_pro"] / (p["K_S_pro"] + s["S_pro"]) * s["X_pro"] *
                  f_aa * i_in * ih_pro)
        rho[10] = (p["k_m_ac"] * s["S_ac"] / (p["K_S_ac"] + s["S_ac"]) * s["X_ac"] *
                   f_ac2 * i_in * i_nh3)
        rho[11] = (p["k_m_h2"] * s_h2 / (p["K_S_h2"] + s_h2) * s["X_h2"] * f_h2g * i_in)
        rho[12] = p["k_dec_xsu"] * s["X_su"]
        rho[13] = p["k_dec_xaa"] * s["X_aa"]
        rho[14] = p["k_dec_xfa"] * s["X_fa"]
        rho[15] = p["k_dec_xc4"] * s["X_c4"]
        rho[16] = p["k_dec_xpro"] * s["X_pro"]
        rho[17] = p["k_dec_xac"] * s["X_ac"]
        rho[18] = p["k_dec_xh2"] * s["X_h2"]
        return rho

    def h2_net(s_h2):
        rho = rates(s_h2)
        prod = ((1 - p["Y_su"]) * p["f_h2_su"] * rho[4] +
                (1 - p["Y_aa"]) * p["f_h2_aa"] * rho[5] +
                (1 - p["Y_fa"]) * 0.3 * rho[6] + (1 - p["Y_c4"]) * 0.15 * rho[7] +
                (1 - p["Y_c4"]) * 0.2 * rho[8] + (1 - p["Y_pro"]) * 0.43 * rho[9])
        uptake = rho[11]
        transfer = p["k_L_a"] * (s_h2 - 16.0 * k_h_h2 * p_gas_h2)
        return q / v_liq * (inflow["S_h2"] - s_h2) + prod - uptake - transfer

    s["S_h2"] = bisect(h2_net, 0.0, 1.0)

    rho = rates(s["S_h2"])
    pp_h2 = s["S_gas_h2"] * r * t_op / 16.0
    pp_ch4 = s["S_gas_ch4"] * r * t_op / 64.0
    pp_co2 = s["S_gas_co2"] * r * t_op
    t_h2 = p["k_L_a"] * (s["S_h2"] - 16.0 * k_h_h2 * pp_h2)
    t_ch4 = p["k_L_a"] * (s["S_ch4"] - 64.0 * k_h_ch4 * pp_ch4)
    t_co2 = p["k_L_a"] * ((s["S_IC"] - s["S_hco3"]) - k_h_co2 * pp_co2)
    p_total = pp_h2 + pp_ch4 + pp_co2 + p_h2o
    k_p_eff = p["k_p"] * (v_gas / p["k_p_ref_v_gas"])
    q_gas = max(0.0, k_p_eff * (p_total - p_atm))

    decay = sum(rho[12:19])
    reac = dict.fromkeys(COMPONENTS, 0.0)
    reac["S_su"] = rho[1] + (1 - p["f_fa_li"]) * rho[3] - rho[4]
    reac["S_aa"] = rho[2] - rho[5]
    reac["S_fa"] = p["f_fa_li"] * rho[3] - rho[6]
    reac["S_va"] = (1 - p["Y_aa"]) * p["f_va_aa"] * rho[5] - rho[7]
    reac["S_bu"] = ((1 - p["Y_su"]) * p["f_bu_su"] * rho[4] +
                    (1 - p["Y_aa"]) * p["f_bu_aa"] * rho[5] - rho[8])
    reac["S_pro"] = ((1 - p["Y_su"]) * p["f_pro_su"] * rho[4] +
                     (1 - p["Y_aa"]) * p["f_pro_aa"] * rho[5] +
                     (1 - p["Y_c4"]) * 0.54 * rho[7] - rho[9])
    reac["S_ac"] = ((1 - p["Y_su"]) * p["f_ac_su"] * rho[4] +
                    (1 - p["Y_aa"]) * p["f_ac_aa"] * rho[5] +
                    (1 - p["Y_fa"]) * 0.7 * rho[6] + (1 - p["Y_c4"]) * 0.31 * rho[7] +
                    (1 - p["Y_c4"]) * 0.8 * rho[8] + (1 - p["Y_pro"]) * 0.57 * rho[9] - rho[10])
    reac["S_h2"] = ((1 - p["Y_su"]) * p["f_h2_su"] * rho[4] +
                    (1 - p["Y_aa"]) * p["f_h2_aa"] * rho[5] +
                    (1 - p["Y_fa"]) * 0.3 * rho[6] + (1 - p["Y_c4"]) * 0.15 * rho[7] +
                    (1 - p["Y_c4"]) * 0.2 * rho[8] + (1 - p["Y_pro"]) * 0.43 * rho[9] - rho[11])
    reac["S_ch4"] = (1 - p["Y_ac"]) * rho[10] + (1 - p["Y_h2"]) * rho[11]

    c1 = (-p["C_xc"] + p["f_sI_xc"] * p["C_sI"] + p["f_ch_xc"] * p["C_ch"] +
          p["f_pr_xc"] * p["C_pr"] + p["f_li_xc"] * p["C_li"] + p["f_xI_xc"] * p["C_xI"])
    c2 = -p["C_ch"] + p["C_su"]
    c3 = -p["C_pr"] + p["C_aa"]
    c4s = -p["C_li"] + (1 - p["f_fa_li"]) * p["C_su"] + p["f_fa_li"] * p["C_fa"]
    c5 = (-p["C_su"] + (1 - p["Y_su"]) * (p["f_bu_su"] * p["C_bu"] +
          p["f_pro_su"] * p["C_pro"] + p["f_ac_su"] * p["C_ac"]) + p["Y_su"] * p["C_bac"])
    c6 = (-p["C_aa"] + (1 - p["Y_aa"]) * (p["f_va_aa"] * p["C_va"] +
          p["f_bu_aa"] * p["C_bu"] + p["f_pro_aa"] * p["C_pro"] +
          p["f_ac_aa"] * p["C_ac"]) + p["Y_aa"] * p["C_bac"])
    c7 = -p["C_fa"] + (1 - p["Y_fa"]) * 0.7 * p["C_ac"] + p["Y_fa"] * p["C_bac"]
    c8 = (-p["C_va"] + (1 - p["Y_c4"]) * 0.54 * p["C_pro"] +
          (1 - p["Y_c4"]) * 0.31 * p["C_ac"] + p["Y_c4"] * p["C_bac"])
    c9 = -p["C_bu"] + (1 - p["Y_c4"]) * 0.8 * p["C_ac"] + p["Y_c4"] * p["C_bac"]
    c10 = -p["C_pro"] + (1 - p["Y_pro"]) * 0.57 * p["C_ac"] + p["Y_pro"] * p["C_bac"]
    c11 = -p["C_ac"] + (1 - p["Y_ac"]) * p["C_ch4"] + p["Y_ac"] * p["C_bac"]
    c12 = (1 - p["Y_h2"]) * p["C_ch4"] + p["Y_h2"] * p["C_bac"]
    c13 = -p["C_bac"] + p["C_xc"]
    reac["S_IC"] = -(c1 * rho[0] + c2 * rho[1] + c3 * rho[2] + c4s * rho[3] + c5 * rho[4] +
                     c6 * rho[5] + c7 * rho[6] + c8 * rho[7] + c9 * rho[8] + c10 * rho[9] +
                     c11 * rho[10] + c12 * rho[11] + c13 * decay)
    reac["S_IN"] = ((p["N_xc"] - p["f_xI_xc"] * p["N_I"] - p["f_sI_xc"] * p["N_I"] -
                     p["f_pr_xc"] * p["N_aa"]) * rho[0] -
                    p["Y_su"] * p["N_bac"] * rho[4] +
                    (p["N_aa"] - p["Y_aa"] * p["N_bac"]) * rho[5] -
                    p["Y_fa"] * p["N_bac"] * rho[6] - p["Y_c4"] * p["N_bac"] * rho[7] -
                    p["Y_c4"] * p["N_bac"] * rho[8] - p["Y_pro"] * p["N_bac"] * rho[9] -
                    p["Y_ac"] * p["N_bac"] * rho[10] - p["Y_h2"] * p["N_bac"] * rho[11] +
                    (p["N_bac"] - p["N_xc"]) * decay)
    reac["S_I"] = p["f_sI_xc"] * rho[0]
    reac["X_c"] = -rho[0] + decay
    reac["X_ch"] = p["f_ch_xc"] * rho[0] - rho[1]
    reac["X_pr"] = p["f_pr_xc"] * rho[0] - rho[2]
    reac["X_li"] = p["f_li_xc"] * rho[0] - rho[3]
    reac["X_su"] = p["Y_su"] * rho[4] - rho[12]
    reac["X_aa"] = p["Y_aa"] * rho[5] - rho[13]
    reac["X_fa"] = p["Y_fa"] * rho[6] - rho[14]
    reac["X_c4"] = p["Y_c4"] * rho[7] + p["Y_c4"] * rho[8] - rho[15]
    reac["X_pro"] = p["Y_pro"] * rho[9] - rho[16]
    reac["X_ac"] = p["Y_ac"] * rho[10] - rho[17]
    reac["X_h2"] = p["Y_h2"] * rho[11] - rho[18]
    reac["X_I"] = p["f_xI_xc"] * rho[0]

    d = {}
    for i, name in enumerate(COMPONENTS):
        if i <= COMPONENTS.index("S_an"):
            d[name] = q / v_liq * (inflow[name] - s[name]) + reac[name]
        else:
            d[name] = 0.0
    d["S_h2"] -= t_h2
    d["S_ch4"] -= t_ch4
    d["S_IC"] -= t_co2
    vr = v_liq / v_gas
    d["S_gas_h2"] = -s["S_gas_h2"] * q_gas / v_gas + t_h2 * vr
    d["S_gas_ch4"] = -s["S_gas_ch4"] * q_gas / v_gas + t_ch4 * vr
    d["S_gas_co2"] = -s["S_gas_co2"] * q_gas / v_gas + t_co2 * vr

    print(f"s_h = {sh:.17g}")
    print(f"ph = {-math.log10(sh):.17g}")
    print(f"s_h2_solved = {s['S_h2']:.17g}")
    print(f"q_gas = {q_gas:.17g}")
    for name in ("S_va_ion", "S_bu_ion", "S_pro_ion", "S_ac_ion", "S_hco3", "S_nh3"):
        print(f"ion_{name} = {s[name]:.17g}")
    for j, v in enumerate(rho):
        print(f"rho_{j} = {v:.17g}")
    print(f"t_h2 = {t_h2:.17g}")
    print(f"t_ch4 = {t_ch4:.17g}")
    print(f"t_co2 = {t_co2:.17g}")
    for name in COMPONENTS:
        print(f"d_{name} = {d[name]:.17g}")


if __name__ == "__main__":
    main()
