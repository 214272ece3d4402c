#pragma once

#include <array>
#include <cmath>

#include "chad/components.hpp"

namespace chad {

/// Concentration state of one reactor (or one AD particle). The 35 vector
/// entries are integrated or algebraically solved; the proton concentration
/// s_h is always algebraic and carried alongside so that warm starts stay
/// with the particle they belong to.
struct AdmState {
    std::array<double, kNumComponents> y{};
    double s_h = 0.0; // kmol/m3; 0 means "not solved yet"

    double& operator[](Component c) { return y[static_cast<std::size_t>(c)]; }
    double operator[](Component c) const { return y[static_cast<std::size_t>(c)]; }

    bool has_ph() const { return s_h > 0.0; }
    double ph() const { return -std::log10(s_h); }

    /// Most negative entry (0 if none are negative).
    double worst_negative() const {
        double w = 0.0;
        for (double v : y)
            if (v < w) w = v;
        return w;
    }

    bool operator==(const AdmState&) const = default;
};

} // namespace chad
