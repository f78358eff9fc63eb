#include "electionpulse/spelling.hpp"

#include "electionpulse/common.hpp"
#include "electionpulse/ini.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <unordered_set>

namespace electionpulse::preprocess {

std::size_t edit_distance(std::string_view a, std::string_view b) {
    const std::size_t n = a.size();
    const std::size_t m = b.size();
    // three rolling rows are enough for adjacent transpositions
    std::vector<std::size_t> prev2(m + 1), prev(m + 1), cur(m + 1);
    for (std::size_t j = 0; j <= m; ++j) prev[j] = j;
    for (std::size_t i = 1; i <= n; ++i) {
        cur[0] = i;
        for (std::size_t j = 1; j <= m; ++j) {
            const std::size_t cost = a[i - 1] == b[j - 1] ? 0 : 1;
            cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + cost});
            if (i > 1 && j > 1 && a[i - 1] == b[j - 2] && a[i - 2] == b[j - 1])
                cur[j] = std::min(cur[j], prev2[j - 2] + 1);
        }
        std::swap(prev2, prev);
        std::swap(prev, cur);
    }
    return prev[m];
}

namespace {

// All strings reachable from word by deleting up to max_deletes characters,
// including word itself.
std::unordered_set<std::string> deletions(std::string_view word, std::size_t max_deletes) {
    std::unordered_set<std::string> out{std::string(word)};
    std::vector<std::string> frontier{std::string(word)};
    for (std::size_t depth = 0; depth < max_deletes; ++depth) {
        std::vector<std::string> next;
        for (const auto& w : frontier) {
            for (std::size_t i = 0; i < w.size(); ++i) {
                std::string d = w.substr(0, i) + w.substr(i + 1);
                if (out.insert(d).second) next.push_back(std::move(d));
            }
        }
        frontier = std::move(next);
    }
    return out;
}

}  // namespace

SpellingDictionary SpellingDictionary::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open dictionary '" + path.string() + "'");
    return parse(in);
}

SpellingDictionary SpellingDictionary::parse(std::istream& in) {
    SpellingDictionary dict;
    std::string line;
    while (std::getline(in, line)) {
        auto view = ini::trim(line);
        if (view.empty() || view.front() == '#') continue;
        const auto tab = view.find('\t');
        if (tab == std::string_view::npos) {
            ++dict.skipped_lines_;
            continue;
        }
        const auto word = ini::trim(view.substr(0, tab));
        const auto count_text = ini::trim(view.substr(tab + 1));
        std::uint64_t count = 0;
        auto [ptr, ec] =
            std::from_chars(count_text.data(), count_text.data() + count_text.size(), count);
        if (word.empty() || ec != std::errc{} || ptr != count_text.data() + count_text.size()) {
            ++dict.skipped_lines_;
            continue;
        }
        dict.add(word, count);
    }
    return dict;
}

void SpellingDictionary::add(std::string_view word, std::uint64_t count) {
    if (auto it = ids_.find(word); it != ids_.end()) {
        counts_[it->second] += count;
        return;
    }
    const auto id = static_cast<std::uint32_t>(words_.size());
    words_.emplace_back(word);
    counts_.push_back(count);
    ids_.emplace(std::string(word), id);
    for (auto& d : deletions(word, kMaxDistance)) deletes_[std::move(d)].push_back(id);
}

bool SpellingDictionary::contains(std::string_view word) const {
    return ids_.find(word) != ids_.end();
}

std::uint64_t SpellingDictionary::frequency(std::string_view word) const {
    auto it = ids_.find(word);
    return it == ids_.end() ? 0 : counts_[it->second];
}

std::string SpellingDictionary::correct(std::string_view token) const {
    if (token.empty() || contains(token) || words_.empty()) return std::string(token);

    std::unordered_set<std::uint32_t> seen;
    const std::string* best = nullptr;
    std::uint64_t best_count = 0;
    for (const auto& d : deletions(token, kMaxDistance)) {
        auto it = deletes_.find(d);
        if (it == deletes_.end()) continue;
        for (auto id : it->second) {
            if (!seen.insert(id).second) continue;
            const auto& candidate = words_[id];
            if (edit_distance(token, candidate) > kMaxDistance) continue;
            const auto c = counts_[id];
            if (!best || c > best_count || (c == best_count && candidate < *best)) {
                best = &candidate;
                best_count = c;
            }
        }
    }
    return best ? *best : std::string(token);
}

}  // namespace electionpulse::preprocess
