#include "electionpulse/common.hpp"
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

constexpr double kSumTolerance = 1e-6;

std::vector<std::string_view> split_tabs(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t pos = 0;
    while (true) {
        const auto tab = line.find('\t', pos);
        if (tab == std::string_view::npos) {
            fields.push_back(line.substr(pos));
            return fields;
        }
        fields.push_back(line.substr(pos, tab - pos));
        pos = tab + 1;
    }
}

std::optional<double> parse_score(std::string_view s) {
    s = ini::trim(s);
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
    if (!std::isfinite(v) || v < 0.0 || v > 1.0) return std::nullopt;
    return v;
}

}  // namespace

SenseLexicon SenseLexicon::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open sense lexicon '" + path.string() + "'");
    return parse(in);
}

SenseLexicon SenseLexicon::parse(std::istream& in) {
    SenseLexicon lex;
    std::string raw;
    while (std::getline(in, raw)) {
        std::string_view line = raw;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (ini::trim(line).empty() || line.front() == '#') continue;
        ++lex.report_.rows_read;

        const auto fields = split_tabs(line);
        bool ok = fields.size() >= 5;
        char pos_tag = 0;
        std::optional<double> pos, neg;
        if (ok) {
            const auto tag = ini::trim(fields[0]);
            ok = tag.size() == 1 && std::string_view("anvrs").find(tag[0]) != std::string_view::npos;
            if (ok) pos_tag = tag[0] == 's' ? 'a' : tag[0];
        }
        if (ok) {
            pos = parse_score(fields[2]);
            neg = parse_score(fields[3]);
            ok = pos && neg && *pos + *neg <= 1.0 + kSumTolerance;
        }
        std::vector<SenseEntry> row_entries;
        if (ok) {
            const double obj = std::max(0.0, 1.0 - *pos - *neg);
            for (const auto& term : ini::split_list(fields[4], ' ')) {
                const auto hash = term.rfind('#');
                int rank = 0;
                if (hash == std::string::npos || hash == 0) {
                    ok = false;
                    break;
                }
                auto [ptr, ec] = std::from_chars(term.data() + hash + 1, term.data() + term.size(), rank);
                if (ec != std::errc{} || ptr != term.data() + term.size() || rank < 1) {
                    ok = false;
                    break;
                }
                row_entries.push_back(SenseEntry{preprocess::to_lower(term.substr(0, hash)), pos_tag,
                                                 rank, *pos, *neg, obj});
            }
            ok = ok && !row_entries.empty();
        }
        if (!ok) {
            ++lex.report_.rows_rejected;
            continue;
        }
        ++lex.report_.rows_accepted;
        for (auto& e : row_entries) {
            lex.by_lemma_[e.lemma].push_back(lex.entries_.size());
            lex.entries_.push_back(std::move(e));
        }
    }
    lex.report_.entries = lex.entries_.size();
    return lex;
}

std::optional<WordSentiment> SenseLexicon::word_sentiment(std::string_view lemma) const {
    auto it = by_lemma_.find(std::string(lemma));
    if (it == by_lemma_.end()) return std::nullopt;
    double pos = 0.0, neg = 0.0, weight = 0.0;
    for (auto idx : it->second) {
        const auto& e = entries_[idx];
        const double w = 1.0 / e.sense_rank;
        pos += w * e.pos_score;
        neg += w * e.neg_score;
        weight += w;
    }
    return WordSentiment{pos / weight, neg / weight};
}

double swn_polarity(const SenseLexicon& lexicon, std::span<const std::string> tokens) {
    return swn_score(lexicon, tokens).polarity();
}

SentimentScore swn_score(const SenseLexicon& lexicon, std::span<const std::string> tokens) {
    double polarity = 0.0, obj = 0.0;
    std::size_t matched = 0;
    for (const auto& t : tokens) {
        if (auto ws = lexicon.word_sentiment(t)) {
            polarity += ws->pos - ws->neg;
            obj += ws->obj();
            ++matched;
        }
    }
    if (matched == 0) return {0.0, 0.0};
    const double p = std::clamp(polarity / matched, -1.0, 1.0);
    const double s = std::clamp(1.0 - obj / matched, 0.0, 1.0);
    return {p, s};
}

}  // namespace electionpulse::sentiment
