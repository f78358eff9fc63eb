#include "electionpulse/common.hpp"
#include "electionpulse/csv.hpp"
#include "electionpulse/ini.hpp"
#include "electionpulse/preprocess.hpp"
#include "electionpulse/sentiment.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>

namespace electionpulse::sentiment {

namespace {

std::optional<double> parse_in_range(std::string_view s, double lo, double hi) {
    s = ini::trim(s);
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
    if (!std::isfinite(v) || v < lo || v > hi) return std::nullopt;
    return v;
}

}  // namespace

PatternLexicon PatternLexicon::load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open pattern lexicon '" + path.string() + "'");
    return parse(in);
}

PatternLexicon PatternLexicon::parse(std::istream& in) {
    std::vector<PatternEntry> rows;
    std::size_t rejected = 0;
    const auto records = csv::read_all(in);
    for (std::size_t i = 0; i < records.size(); ++i) {
        const auto& r = records[i];
        if (i == 0 && !r.empty() && ini::trim(r[0]) == "lemma") continue;
        if (r.size() == 1 && ini::trim(r[0]).empty()) continue;
        if (r.size() == 1 && ini::trim(r[0]).starts_with('#')) continue;
        auto lemma = preprocess::to_lower(ini::trim(r.empty() ? "" : r[0]));
        auto pol = r.size() == 3 ? parse_in_range(r[1], -1.0, 1.0) : std::nullopt;
        auto subj = r.size() == 3 ? parse_in_range(r[2], 0.0, 1.0) : std::nullopt;
        if (lemma.empty() || !pol || !subj) {
            ++rejected;
            continue;
        }
        rows.push_back(PatternEntry{std::move(lemma), *pol, *subj});
    }
    auto lex = from_entries(rows);
    lex.report_.rows_read = rows.size() + rejected;
    lex.report_.rows_rejected = rejected;
    return lex;
}

PatternLexicon PatternLexicon::from_entries(std::span<const PatternEntry> rows) {
    struct Sum {
        double polarity = 0.0;
        double subjectivity = 0.0;
        std::size_t n = 0;
    };
    std::map<std::string, Sum, std::less<>> sums;
    for (const auto& r : rows) {
        auto& s = sums[r.lemma];
        s.polarity += r.polarity;
        s.subjectivity += r.subjectivity;
        ++s.n;
    }
    PatternLexicon lex;
    for (const auto& [lemma, s] : sums) {
        const double n = static_cast<double>(s.n);
        lex.entries_.emplace(lemma, PatternEntry{lemma, s.polarity / n, s.subjectivity / n});
    }
    lex.report_.rows_read = rows.size();
    lex.report_.lemmas = lex.entries_.size();
    return lex;
}

const PatternEntry* PatternLexicon::find(std::string_view lemma) const {
    auto it = entries_.find(lemma);
    return it == entries_.end() ? nullptr : &it->second;
}

std::set<std::string, std::less<>> load_word_list(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open word list '" + path.string() + "'");
    return parse_word_list(in);
}

std::set<std::string, std::less<>> parse_word_list(std::istream& in) {
    std::set<std::string, std::less<>> words;
    std::string line;
    while (std::getline(in, line)) {
        std::string_view v = line;
        if (auto hash = v.find('#'); hash != std::string_view::npos) v = v.substr(0, hash);
        v = ini::trim(v);
        if (!v.empty()) words.insert(preprocess::to_lower(v));
    }
    return words;
}

SentimentScore pattern_score(std::span<const std::string> tokens, const PatternLexicon& lexicon,
                             const std::set<std::string, std::less<>>& negators) {
    double polarity = 0.0, subjectivity = 0.0;
    std::size_t matched = 0;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (negators.contains(tokens[i])) continue;
        const auto* entry = lexicon.find(tokens[i]);
        if (!entry) continue;
        bool negated = false;
        for (std::size_t back = 1; back <= kNegationWindow && back <= i; ++back)
            negated = negated || negators.contains(tokens[i - back]);
        polarity += negated ? -0.5 * entry->polarity : entry->polarity;
        subjectivity += entry->subjectivity;
        ++matched;
    }
    if (matched == 0) return {0.0, 0.0};
    const double n = static_cast<double>(matched);
    return {std::clamp(polarity / n, -1.0, 1.0), std::clamp(subjectivity / n, 0.0, 1.0)};
}

}  // namespace electionpulse::sentiment
