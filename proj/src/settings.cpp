#include "chad/settings.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace chad {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

} // namespace

SettingsFile SettingsFile::parse_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open settings file: " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_string(buf.str(), path.string());
}

SettingsFile SettingsFile::parse_string(std::string_view text, const std::string& name) {
    SettingsFile f;
    f.name_ = name;
    std::string section;
    long line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
        ++line_no;

        if (std::size_t hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']' || line.size() < 3)
                throw ParseError(name, line_no, "malformed section header");
            section = std::string(trim(line.substr(1, line.size() - 2)));
            continue;
        }

        std::size_t eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ParseError(name, line_no, "expected key = value");
        std::string key(trim(line.substr(0, eq)));
        std::string value(trim(line.substr(eq + 1)));
        if (key.empty()) throw ParseError(name, line_no, "empty key");
        if (!section.empty()) key = section + "." + key;
        auto [it, inserted] = f.values_.emplace(key, Entry{value, line_no});
        if (!inserted)
            throw ParseError(name, line_no,
                             "duplicate key '" + key + "' (first at line " +
                                 std::to_string(it->second.line) + ")");
    }
    return f;
}

double SettingsFile::number(const std::string& key) const {
    auto it = values_.find(key);
    if (it == values_.end()) throw ConfigError(name_ + ": missing required key '" + key + "'");
    const std::string& v = it->second.value;
    double out = 0.0;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc{} || ptr != v.data() + v.size())
        throw ParseError(name_, it->second.line, "key '" + key + "': not a number: '" + v + "'");
    return out;
}

double SettingsFile::number_or(const std::string& key, double fallback) const {
    return has(key) ? number(key) : fallback;
}

long SettingsFile::integer(const std::string& key) const {
    auto it = values_.find(key);
    if (it == values_.end()) throw ConfigError(name_ + ": missing required key '" + key + "'");
    const std::string& v = it->second.value;
    long out = 0;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc{} || ptr != v.data() + v.size())
        throw ParseError(name_, it->second.line, "key '" + key + "': not an integer: '" + v + "'");
    return out;
}

long SettingsFile::integer_or(const std::string& key, long fallback) const {
    return has(key) ? integer(key) : fallback;
}

std::string SettingsFile::str(const std::string& key) const {
    auto it = values_.find(key);
    if (it == values_.end()) throw ConfigError(name_ + ": missing required key '" + key + "'");
    return it->second.value;
}

std::string SettingsFile::str_or(const std::string& key, const std::string& fallback) const {
    return has(key) ? str(key) : fallback;
}

std::vector<std::string> SettingsFile::keys() const {
    std::vector<std::string> out;
    out.reserve(values_.size());
    for (const auto& [k, v] : values_) out.push_back(k);
    return out;
}

long SettingsFile::line_of(const std::string& key) const {
    auto it = values_.find(key);
    return it == values_.end() ? 0 : it->second.line;
}

} // namespace chad
