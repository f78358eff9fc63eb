#pragma once

#include "electionpulse/common.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace electionpulse {

/// One stored tweet after parsing. Immutable once constructed.
struct TweetRecord {
    std::string id;
    LocalTime created_at;
    std::string author;
    std::string text;
    /// Source carried a retweeted_status object or the text opens with "RT @".
    bool is_retweet = false;
};

/// A tweet that survived preprocessing.
struct ProcessedTweet {
    std::string record_id;
    LocalTime created_at;
    /// Index into kTimeBuckets; nullopt before 06:00 local time.
    std::optional<std::size_t> bucket;
    /// Cleaned, tokenized text before any correction or filtering. Actor
    /// matching runs on this stream.
    std::vector<std::string> surface;
    /// surface after spelling correction. Sentiment scoring runs on this
    /// stream so negators and lexicon lemmas are still visible.
    std::vector<std::string> words;
    /// Final tokens: stopwords and punctuation removed, stemmed.
    std::vector<std::string> tokens;
    std::size_t raw_token_count = 0;

    [[nodiscard]] std::string_view bucket_label() const {
        return bucket ? kTimeBuckets[*bucket].label : std::string_view{};
    }
};

}  // namespace electionpulse
