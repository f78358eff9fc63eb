#include "electionpulse/ini.hpp"

#include "electionpulse/common.hpp"

#include <fstream>
#include <istream>

namespace electionpulse::ini {

std::string_view trim(std::string_view s) {
    constexpr std::string_view ws = " \t\r\n\f\v";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(std::string_view value, char sep) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos <= value.size()) {
        auto end = value.find(sep, pos);
        if (end == std::string_view::npos) end = value.size();
        auto item = trim(value.substr(pos, end - pos));
        if (!item.empty()) out.emplace_back(item);
        pos = end + 1;
    }
    return out;
}

const Entry* Section::find(std::string_view key) const {
    // last assignment wins
    for (auto it = entries.rbegin(); it != entries.rend(); ++it)
        if (it->key == key) return &*it;
    return nullptr;
}

Document Document::parse(std::istream& in, std::string source_name) {
    Document doc;
    doc.source_ = std::move(source_name);
    std::vector<std::string> errors;
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        auto line = trim(raw);
        if (line.empty() || line.front() == '#' || line.front() == ';') continue;
        if (line.front() == '[') {
            if (line.back() != ']' || trim(line.substr(1, line.size() - 2)).empty()) {
                errors.push_back(doc.source_ + ":" + std::to_string(lineno) +
                                 ": malformed section header");
                continue;
            }
            doc.sections_.push_back(
                Section{std::string(trim(line.substr(1, line.size() - 2))), lineno, {}});
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos || trim(line.substr(0, eq)).empty()) {
            errors.push_back(doc.source_ + ":" + std::to_string(lineno) +
                             ": expected 'key = value'");
            continue;
        }
        if (doc.sections_.empty()) {
            errors.push_back(doc.source_ + ":" + std::to_string(lineno) +
                             ": key outside of any section");
            continue;
        }
        doc.sections_.back().entries.push_back(Entry{std::string(trim(line.substr(0, eq))),
                                                     std::string(trim(line.substr(eq + 1))),
                                                     lineno});
    }
    if (!errors.empty()) {
        std::string msg;
        for (const auto& e : errors) msg += (msg.empty() ? "" : "\n") + e;
        throw ConfigError(msg);
    }
    return doc;
}

Document Document::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path.string() + "'");
    return parse(in, path.string());
}

const Section* Document::find(std::string_view name) const {
    for (const auto& s : sections_)
        if (s.name == name) return &s;
    return nullptr;
}

std::optional<std::string> Document::get(std::string_view section, std::string_view key) const {
    // a section may be split across several headers; later ones win
    for (auto it = sections_.rbegin(); it != sections_.rend(); ++it) {
        if (it->name != section) continue;
        if (const auto* e = it->find(key)) return e->value;
    }
    return std::nullopt;
}

}  // namespace electionpulse::ini
