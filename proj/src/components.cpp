#include "chad/components.hpp"

namespace chad {

std::optional<Component> component_from_name(std::string_view name) {
    for (int i = 0; i < kNumComponents; ++i)
        if (kComponentNames[static_cast<std::size_t>(i)] == name)
            return static_cast<Component>(i);
    // gas-phase reporting aliases
    if (name == "G_h2") return S_gas_h2;
    if (name == "G_ch4") return S_gas_ch4;
    if (name == "G_co2") return S_gas_co2;
    return std::nullopt;
}

} // namespace chad
