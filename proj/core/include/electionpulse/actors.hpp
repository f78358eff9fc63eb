#pragma once

#include "electionpulse/ini.hpp"
#include "electionpulse/tweet.hpp"

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace electionpulse::actors {

enum class ActorKind { kCandidate, kParty, kCombined };

std::string_view to_string(ActorKind kind);

struct Actor {
    std::string id;
    ActorKind kind = ActorKind::kCandidate;
    /// Lowercase match phrases. Combined actors may leave this empty; they
    /// match through their components.
    std::vector<std::string> aliases;
    /// (candidate id, party id) for combined actors.
    std::optional<std::pair<std::string, std::string>> components;
};

using IdSet = std::set<std::string, std::less<>>;

/// Validated, immutable collection of actors.
class ActorSet {
public:
    ActorSet() = default;

    /// Throws ConfigError carrying every violation found.
    static ActorSet from_actors(std::vector<Actor> actors);
    /// Reads "[actor <id>]" sections with kind / aliases / components keys.
    static ActorSet from_document(const ini::Document& doc);
    static ActorSet load(const std::filesystem::path& path);

    /// Every violation, one message each; empty when valid.
    static std::vector<std::string> validate(const std::vector<Actor>& actors);
    static std::vector<Actor> parse_document(const ini::Document& doc,
                                             std::vector<std::string>& diagnostics);

    [[nodiscard]] const std::vector<Actor>& actors() const { return actors_; }
    [[nodiscard]] const Actor* find(std::string_view id) const;
    [[nodiscard]] bool empty() const { return actors_.empty(); }

    /// Actor ids whose alias occurs as a contiguous phrase in the token
    /// stream, plus combined actors whose components both matched.
    [[nodiscard]] IdSet match(std::span<const std::string> surface) const;

    /// Every word of every alias, lowercase.
    [[nodiscard]] std::set<std::string, std::less<>> alias_words() const;

private:
    std::vector<Actor> actors_;
    // alias phrases, tokenized like tweet text
    std::vector<std::vector<std::vector<std::string>>> phrases_;
};

/// Matches against the tweet's unstemmed surface tokens.
IdSet match_actors(const ProcessedTweet& tweet, const ActorSet& actors);

/// Matches raw text after clean + tokenize.
IdSet match_text(std::string_view raw_text, const ActorSet& actors);

struct MentionRow {
    std::string tweet_id;
    IdSet actors;
};

/// Tweet-aligned rows of matched actor ids.
using MentionMatrix = std::vector<MentionRow>;

MentionMatrix build_mentions(std::span<const ProcessedTweet> tweets, const ActorSet& actors);

/// The single scope actor the tweet talks about, if any. A matched combined
/// actor in scope absorbs its own candidate and party, so "obiano ... apga"
/// is a sole mention of the combined actor when that actor is in scope.
std::optional<std::string> sole_mention(const IdSet& matched, const ActorSet& actors,
                                        const IdSet& scope);

/// Tweets per actor; every configured actor appears, zero if unmatched.
std::map<std::string, std::size_t> group_counts(const MentionMatrix& matrix,
                                                const ActorSet& actors);

}  // namespace electionpulse::actors
