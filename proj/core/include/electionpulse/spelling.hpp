#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace electionpulse::preprocess {

/// Optimal string alignment distance (insert, delete, substitute, swap of
/// two adjacent characters).
std::size_t edit_distance(std::string_view a, std::string_view b);

/// Unigram word-frequency table with an edit-distance corrector.
///
/// Candidates are found through a symmetric-delete index: every word and
/// every query are expanded to their deletions up to kMaxDistance, and
/// shared deletions are verified with edit_distance().
class SpellingDictionary {
public:
    static constexpr std::size_t kMaxDistance = 2;

    SpellingDictionary() = default;

    /// "word<TAB>count" per line; blank and '#' lines ignored, malformed
    /// lines skipped and counted. Throws IoError if unreadable.
    static SpellingDictionary load(const std::filesystem::path& path);
    static SpellingDictionary parse(std::istream& in);

    /// Adds count to word (creating it if needed).
    void add(std::string_view word, std::uint64_t count);

    [[nodiscard]] bool contains(std::string_view word) const;
    [[nodiscard]] std::uint64_t frequency(std::string_view word) const;
    [[nodiscard]] const std::vector<std::string>& words() const { return words_; }
    [[nodiscard]] std::size_t size() const { return words_.size(); }
    [[nodiscard]] bool empty() const { return words_.empty(); }
    [[nodiscard]] std::size_t skipped_lines() const { return skipped_lines_; }

    /// The most frequent dictionary word within kMaxDistance of token, ties
    /// broken by lexicographic order. Returns token unchanged when it is
    /// itself a dictionary word or nothing is close enough.
    [[nodiscard]] std::string correct(std::string_view token) const;

private:
    struct Hash {
        using is_transparent = void;
        std::size_t operator()(std::string_view s) const noexcept {
            return std::hash<std::string_view>{}(s);
        }
    };
    using Index = std::unordered_map<std::string, std::vector<std::uint32_t>, Hash, std::equal_to<>>;

    std::vector<std::string> words_;
    std::vector<std::uint64_t> counts_;
    std::unordered_map<std::string, std::uint32_t, Hash, std::equal_to<>> ids_;
    Index deletes_;
    std::size_t skipped_lines_ = 0;
};

}  // namespace electionpulse::preprocess
