#pragma once

#include "electionpulse/actors.hpp"
#include "electionpulse/preprocess.hpp"
#include "electionpulse/sentiment.hpp"
#include "electionpulse/tweet.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace electionpulse::analytics {

inline constexpr std::size_t kBucketCount = kTimeBuckets.size();

/// Bucket for a local timestamp; nullopt (out of range) before 06:00.
std::optional<TimeBucket> bucket_of(const LocalTime& time);

/// Mean sentiment of one (actor, bucket) cell. Means are absent when the
/// cell has no tweets; they are never reported as zero.
struct SeriesCell {
    std::size_t count = 0;
    std::optional<double> mean_polarity_scaled;
    std::optional<double> mean_subjectivity;
};

struct SentimentSeries {
    std::string actor;
    std::array<SeriesCell, kBucketCount> cells;
};

/// Per scope actor and bucket, averages over tweets whose sole mention is
/// that actor. polarity/subjectivity are aligned with tweets; a length
/// mismatch throws ConsistencyError. Series follow the order of scope.
std::vector<SentimentSeries> avg_sentiment_series(std::span<const ProcessedTweet> tweets,
                                                  std::span<const double> polarity,
                                                  std::span<const double> subjectivity,
                                                  const actors::ActorSet& actors,
                                                  std::span<const std::string> scope,
                                                  double polarity_scale = 100.0);

using TermCount = std::pair<std::string, std::size_t>;

/// Ranked (term, count) list: counts descending, then term ascending.
struct FrequencyTable {
    std::string group;
    std::vector<TermCount> terms;
};

using TweetGroup = std::vector<const ProcessedTweet*>;

/// Counts final tokens of the group, dropping excluded terms, keeping at
/// most top_n rows. top_n == 0 is a ContractViolation.
FrequencyTable term_frequencies(const TweetGroup& tweets, const preprocess::StopwordSet& exclusions,
                                std::size_t top_n);
FrequencyTable term_frequencies(std::span<const ProcessedTweet> tweets,
                                const preprocess::StopwordSet& exclusions, std::size_t top_n);

/// base plus every actor alias word and its stem, with extras switched on.
preprocess::StopwordSet with_actor_exclusions(const preprocess::StopwordSet& base,
                                              const actors::ActorSet& actors);

/// Term frequencies over tweets that mention the actor, with all configured
/// actor names excluded on top of exclusions.
FrequencyTable cooccurrence_cloud(std::span<const ProcessedTweet> tweets,
                                  const actors::ActorSet& actors, std::string_view actor_id,
                                  const preprocess::StopwordSet& exclusions, std::size_t top_n);

/// Dense actor x bucket matrix of frequency tables over sole-mention
/// tweets. Cells without tweets are nullopt.
struct Heatmap {
    std::vector<std::string> actors;
    std::vector<std::array<std::optional<FrequencyTable>, kBucketCount>> cells;
};

Heatmap frequency_heatmap(std::span<const ProcessedTweet> tweets, const actors::ActorSet& actors,
                          std::span<const std::string> scope,
                          const preprocess::StopwordSet& exclusions, std::size_t top_n);

/// Unscaled mean polarity per combined actor (configuration order) over
/// tweets matching it; nullopt when none do.
std::vector<std::pair<std::string, std::optional<double>>> combined_avg_polarity(
    std::span<const ProcessedTweet> tweets, std::span<const double> polarity,
    const actors::ActorSet& actors);

/// Corpus-wide polarity and subjectivity breakdown for one actor, counting
/// every tweet that mentions it regardless of other mentions.
struct ActorSentimentSummary {
    std::string actor;
    actors::ActorKind kind = actors::ActorKind::kCandidate;
    std::size_t tweets = 0;
    sentiment::PolarityDistribution polarity;
    std::size_t subjective = 0;
    std::size_t objective = 0;
    std::optional<double> mean_polarity;
    std::optional<double> mean_subjectivity;
};

std::vector<ActorSentimentSummary> actor_sentiment_summary(
    std::span<const ProcessedTweet> tweets, std::span<const double> polarity,
    std::span<const double> subjectivity, const actors::ActorSet& actors,
    double subjectivity_threshold = 0.5);

}  // namespace electionpulse::analytics
