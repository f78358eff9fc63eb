#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace electionpulse::ini {

// Minimal section/key-value format shared by the run config and the actor
// config:
//
//   # comment
//   [section name]
//   key = value
//
// Section and key names are case-sensitive; values are trimmed.

struct Entry {
    std::string key;
    std::string value;
    int line = 0;
};

struct Section {
    std::string name;
    int line = 0;
    std::vector<Entry> entries;

    [[nodiscard]] const Entry* find(std::string_view key) const;
};

class Document {
public:
    /// Throws ConfigError listing every malformed line.
    static Document parse(std::istream& in, std::string source_name);
    /// Throws IoError when the file cannot be opened.
    static Document load(const std::filesystem::path& path);

    [[nodiscard]] const std::vector<Section>& sections() const { return sections_; }
    [[nodiscard]] const Section* find(std::string_view name) const;
    [[nodiscard]] std::optional<std::string> get(std::string_view section,
                                                 std::string_view key) const;
    [[nodiscard]] const std::string& source() const { return source_; }

private:
    std::string source_;
    std::vector<Section> sections_;
};

/// Splits "a, b ,c" into {"a","b","c"}; empty items are dropped.
std::vector<std::string> split_list(std::string_view value, char sep = ',');

std::string_view trim(std::string_view s);

}  // namespace electionpulse::ini
