#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chad/errors.hpp"

namespace chad {

/// Line-oriented `key = value` file with `#` comments and optional
/// `[section]` headers. Sectioned keys are addressed as "section.key".
/// Duplicate keys are a parse error; unknown-key detection is left to the
/// consumer via keys().
class SettingsFile {
public:
    static SettingsFile parse_file(const std::filesystem::path& path);
    static SettingsFile parse_string(std::string_view text, const std::string& name);

    bool has(const std::string& key) const { return values_.count(key) != 0; }

    double number(const std::string& key) const;
    double number_or(const std::string& key, double fallback) const;
    long integer(const std::string& key) const;
    long integer_or(const std::string& key, long fallback) const;
    std::string str(const std::string& key) const;
    std::string str_or(const std::string& key, const std::string& fallback) const;

    std::vector<std::string> keys() const;
    const std::string& name() const { return name_; }
    long line_of(const std::string& key) const;

private:
    struct Entry {
        std::string value;
        long line = 0;
    };
    std::map<std::string, Entry> values_;
    std::string name_;
};

} // namespace chad
