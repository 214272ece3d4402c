#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "chad/reactor.hpp"

namespace chad {

/// Trajectory CSV: header `time_d,<35 canonical names>,pH,q_gas_m3_d`,
/// one row per recorded time, 17 significant digits (lossless re-parse).
void write_trajectory_csv(const Trajectory& t, const std::filesystem::path& path);

/// Generic numeric CSV table, used to re-read emitted trajectories.
struct CsvTable {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> data; // column-major

    const std::vector<double>& column(const std::string& name) const;
    bool has_column(const std::string& name) const;
    std::size_t rows() const { return data.empty() ? 0 : data.front().size(); }
};

CsvTable read_csv(const std::filesystem::path& path);

std::string format_g17(double v);

} // namespace chad
