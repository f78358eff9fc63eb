#pragma once

#include "electionpulse/actors.hpp"
#include "electionpulse/tweet.hpp"

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace electionpulse::ingest {

/// Maximum tweet text size accepted, in bytes (280 chars of 4-byte UTF-8).
inline constexpr std::size_t kMaxTextBytes = 1120;

/// Dotted JSON paths tried in order for each field.
struct FieldMap {
    std::vector<std::string> id{"id_str", "id"};
    std::vector<std::string> created_at{"created_at"};
    std::vector<std::string> text{"text"};
    std::vector<std::string> author{"user.screen_name"};
    /// Presence (non-null) marks a retweet.
    std::vector<std::string> retweet{"retweeted_status"};

    /// "[fields]" section with "key = path|path" entries; unknown keys and
    /// empty path lists are ConfigErrors.
    static FieldMap load(const std::filesystem::path& path);
};

struct ParseReport {
    std::size_t lines_read = 0;
    std::size_t records = 0;
    std::size_t skipped = 0;
    /// reason -> count; reasons: malformed_json, missing_field,
    /// bad_timestamp, empty_text, text_too_long, duplicate_id
    std::map<std::string, std::size_t> skipped_by_reason;
};

struct ParseResult {
    std::vector<TweetRecord> records;
    ParseReport report;
};

/// One JSON object per line. Bad lines are counted and skipped; the first
/// occurrence of an id wins.
ParseResult parse_tweet_stream(std::istream& source, UtcOffset offset, const FieldMap& fields = {});

/// Throws IoError when the file cannot be opened.
ParseResult parse_tweet_file(const std::filesystem::path& path, UtcOffset offset,
                             const FieldMap& fields = {});

struct GroupCounts {
    std::size_t raw = 0;
    std::size_t kept = 0;
};

struct DatasetStats {
    std::size_t total_raw = 0;
    std::size_t total_kept = 0;
    std::map<std::string, GroupCounts> per_group;
    std::size_t kept_matching_any = 0;
    /// 100 x kept_matching_any / total_kept in hundredths, half up.
    long long coverage_basis_points = 0;

    [[nodiscard]] double coverage_pct() const {
        return static_cast<double>(coverage_basis_points) / 100.0;
    }
};

/// Throws ConsistencyError when a kept tweet has no source record.
DatasetStats dataset_stats(std::span<const TweetRecord> records,
                           std::span<const ProcessedTweet> kept, const actors::ActorSet& groups);

/// RFC-4180 CSV: id, created_at, bucket, tokens, then one true/false
/// column per actor in configuration order.
void export_records(std::span<const ProcessedTweet> tweets, const actors::ActorSet& actors,
                    std::ostream& out);
void export_records(std::span<const ProcessedTweet> tweets, const actors::ActorSet& actors,
                    const std::filesystem::path& path);

struct ExportedRow {
    std::string id;
    std::string created_at;
    std::string bucket;
    std::vector<std::string> tokens;
    std::map<std::string, bool> actors;
};

/// Reads a file written by export_records.
std::vector<ExportedRow> read_exported_records(std::istream& in);

}  // namespace electionpulse::ingest
