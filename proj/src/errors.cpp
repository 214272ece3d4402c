#include "chad/errors.hpp"

#include <cstdio>

namespace chad {

std::string SolverError::trace_summary(const std::vector<double>& t) {
    std::string s = " (iterates:";
    const std::size_t n = t.size();
    const std::size_t shown = n > 8 ? 8 : n;
    char buf[32];
    for (std::size_t i = n - shown; i < n; ++i) {
        std::snprintf(buf, sizeof(buf), " %.6g", t[i]);
        s += buf;
    }
    if (shown < n) s += " ... of " + std::to_string(n);
    s += ")";
    return s;
}

} // namespace chad
