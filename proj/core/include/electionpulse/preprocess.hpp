#pragma once

#include "electionpulse/porter.hpp"
#include "electionpulse/spelling.hpp"
#include "electionpulse/tweet.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace electionpulse::preprocess {

/// Strips URLs, @mentions, '#' marks, emoji and other non-text symbols;
/// collapses whitespace and lowercases. Hashtag words are kept.
std::string clean(std::string_view text);

/// True when the source carried a retweet marker or the text opens with
/// "RT @" (leading whitespace ignored).
bool is_retweet(const TweetRecord& record);

/// Whitespace split with leading/trailing punctuation stripped per token.
/// Interior apostrophes and hyphens survive; empty tokens are dropped.
std::vector<std::string> tokenize(std::string_view text);

/// Lowercases ASCII and the Latin letter blocks that clean() keeps.
std::string to_lower(std::string_view text);

/// Function words plus optional per-analysis extras (actor names).
class StopwordSet {
public:
    StopwordSet() = default;
    explicit StopwordSet(std::set<std::string> base);

    /// One word per line; '#' starts a comment. Throws IoError if unreadable.
    static StopwordSet load(const std::filesystem::path& path);
    static StopwordSet parse(std::istream& in);

    void add_extra(std::string_view word);
    void set_use_extra(bool on) { use_extra_ = on; }
    [[nodiscard]] bool use_extra() const { return use_extra_; }

    /// Case-insensitive. Extras only count while use_extra() is on.
    [[nodiscard]] bool contains(std::string_view word) const;

    [[nodiscard]] const std::set<std::string, std::less<>>& base() const { return base_; }
    [[nodiscard]] const std::set<std::string, std::less<>>& extra() const { return extra_; }

private:
    std::set<std::string, std::less<>> base_;
    std::set<std::string, std::less<>> extra_;
    bool use_extra_ = false;
};

struct PipelineConfig {
    StopwordSet stopwords;
    SpellingDictionary dictionary;
    bool spellcheck = true;
    bool stem = true;
    /// Tokens shorter than this are never spell-corrected.
    std::size_t min_correct_length = 4;
    /// Never spell-corrected (actor aliases, place names).
    std::set<std::string, std::less<>> protected_words;
};

enum class RejectReason { kNone, kRetweet, kEmpty };

struct PipelineResult {
    std::optional<ProcessedTweet> tweet;
    RejectReason reason = RejectReason::kNone;
};

/// Applies clean -> tokenize -> correct -> stopword/punctuation filter ->
/// stem. Stemming runs to a fixed point so the pipeline is idempotent on
/// its own output. Stems that land on a stopword are filtered as well.
class Pipeline {
public:
    explicit Pipeline(PipelineConfig config);

    [[nodiscard]] PipelineResult run(const TweetRecord& record) const;
    /// Spelling step for one token, honouring the length and protection rules.
    [[nodiscard]] std::string correct(const std::string& token) const;

    [[nodiscard]] const PipelineConfig& config() const { return config_; }

private:
    PipelineConfig config_;
    // stems of dictionary and protected words; a token that already is one
    // is not "misspelt"
    std::set<std::string, std::less<>> dictionary_stems_;
};

}  // namespace electionpulse::preprocess
