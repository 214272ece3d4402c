#include "chad/csv.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace chad {

std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_trajectory_csv(const Trajectory& t, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open for writing: " + path.string());
    out << "time_d";
    for (auto name : kComponentNames) out << ',' << name;
    out << ",pH,q_gas_m3_d\n";
    char buf[80];
    for (std::size_t r = 0; r < t.rows(); ++r) {
        std::snprintf(buf, sizeof(buf), "%.17g", t.time_d[r]);
        out << buf;
        for (double v : t.states[r].y) {
            std::snprintf(buf, sizeof(buf), ",%.17g", v);
            out << buf;
        }
        std::snprintf(buf, sizeof(buf), ",%.17g,%.17g\n", t.ph[r], t.q_gas[r]);
        out << buf;
    }
    if (!out) throw IoError("write failed: " + path.string());
}

const std::vector<double>& CsvTable::column(const std::string& name) const {
    for (std::size_t i = 0; i < columns.size(); ++i)
        if (columns[i] == name) return data[i];
    throw ConfigError("csv: no column named '" + name + "'");
}

bool CsvTable::has_column(const std::string& name) const {
    for (const auto& c : columns)
        if (c == name) return true;
    return false;
}

CsvTable read_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open: " + path.string());

    CsvTable tab;
    std::string line;
    long line_no = 0;

    if (!std::getline(in, line)) throw ParseError(path.string(), 1, "empty file");
    ++line_no;
    {
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) tab.columns.push_back(cell);
    }
    if (tab.columns.empty()) throw ParseError(path.string(), 1, "no header columns");
    tab.data.assign(tab.columns.size(), {});

    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::size_t col = 0, pos = 0;
        while (pos <= line.size()) {
            std::size_t comma = line.find(',', pos);
            const std::size_t end = comma == std::string::npos ? line.size() : comma;
            if (col >= tab.columns.size())
                throw ParseError(path.string(), line_no, "too many columns");
            double v = 0.0;
            auto [ptr, ec] = std::from_chars(line.data() + pos, line.data() + end, v);
            if (ec != std::errc{} || ptr != line.data() + end)
                throw ParseError(path.string(), line_no,
                                 "bad number in column '" + tab.columns[col] + "'");
            tab.data[col].push_back(v);
            ++col;
            pos = end + 1;
            if (comma == std::string::npos) break;
        }
        if (col != tab.columns.size())
            throw ParseError(path.string(), line_no, "row has fewer columns than header");
    }
    return tab;
}

} // namespace chad
