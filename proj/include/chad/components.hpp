#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

namespace chad {

// Canonical component ordering of the 35-entry state vector. Soluble and
// particulate concentrations are kgCOD/m3 except S_IC (kmol C/m3) and
// S_IN (kmol N/m3); cations/anions and the bicarbonate/ammonia ion states
// are kmol/m3; the four VFA ion states stay on the COD basis of their
// parent acids. Gas-phase entries are headspace concentrations.
enum Component : int {
    S_su = 0,  // monosaccharides
    S_aa,      // amino acids
    S_fa,      // long-chain fatty acids
    S_va,      // total valerate
    S_bu,      // total butyrate
    S_pro,     // total propionate
    S_ac,      // total acetate
    S_h2,      // dissolved hydrogen
    S_ch4,     // dissolved methane
    S_IC,      // inorganic carbon
    S_IN,      // inorganic nitrogen
    S_I,       // soluble inerts
    X_c,       // composites
    X_ch,      // carbohydrates
    X_pr,      // proteins
    X_li,      // lipids
    X_su,      // sugar degraders
    X_aa,      // amino-acid degraders
    X_fa,      // LCFA degraders
    X_c4,      // valerate/butyrate degraders
    X_pro,     // propionate degraders
    X_ac,      // acetate degraders
    X_h2,      // hydrogen degraders
    X_I,       // particulate inerts
    S_cat,     // other cations
    S_an,      // other anions
    S_va_ion,  // valerate ion
    S_bu_ion,  // butyrate ion
    S_pro_ion, // propionate ion
    S_ac_ion,  // acetate ion
    S_hco3,    // bicarbonate
    S_nh3,     // free ammonia
    S_gas_h2,  // headspace hydrogen
    S_gas_ch4, // headspace methane
    S_gas_co2, // headspace carbon dioxide
};

inline constexpr int kNumComponents = 35;

// First/last indices of useful slices.
inline constexpr int kFirstIonState = S_va_ion;
inline constexpr int kLastIonState = S_nh3;
inline constexpr int kFirstGasState = S_gas_h2;

inline constexpr std::array<std::string_view, kNumComponents> kComponentNames = {
    "S_su", "S_aa", "S_fa", "S_va", "S_bu", "S_pro", "S_ac", "S_h2", "S_ch4",
    "S_IC", "S_IN", "S_I", "X_c", "X_ch", "X_pr", "X_li", "X_su", "X_aa",
    "X_fa", "X_c4", "X_pro", "X_ac", "X_h2", "X_I", "S_cat", "S_an",
    "S_va_ion", "S_bu_ion", "S_pro_ion", "S_ac_ion", "S_hco3", "S_nh3",
    "S_gas_h2", "S_gas_ch4", "S_gas_co2",
};

/// Component from its canonical name; handles the G_* aliases used in
/// gas-phase reporting (G_ch4 -> S_gas_ch4, ...).
std::optional<Component> component_from_name(std::string_view name);

inline std::string_view component_name(Component c) {
    return kComponentNames[static_cast<std::size_t>(c)];
}

/// True for components carried on the COD mass basis (relevant for
/// per-process COD conservation of the stoichiometric matrix).
inline constexpr bool is_cod_based(int i) {
    switch (i) {
    case S_IC:
    case S_IN:
    case S_cat:
    case S_an:
    case S_hco3:
    case S_nh3:
    case S_gas_co2:
        return false;
    default:
        return true;
    }
}

} // namespace chad
