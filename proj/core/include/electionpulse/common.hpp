#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace electionpulse {

// Error taxonomy shared by every module.

/// Source or destination could not be read or written.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two inputs that must agree (ids, alignments) do not.
class ConsistencyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A configuration file or value is invalid.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A model cannot be trained on the given data.
class TrainingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A caller passed a value outside an operation's documented domain.
class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Fixed offset from UTC for the dataset's local clock.
class UtcOffset {
public:
    constexpr UtcOffset() = default;
    constexpr explicit UtcOffset(std::chrono::minutes m) : minutes_(m) {}

    /// Accepts "+01:00", "-0530", "+1", "UTC", "Z", "UTC+01:00".
    static UtcOffset parse(std::string_view text);

    [[nodiscard]] constexpr std::chrono::minutes minutes() const { return minutes_; }
    /// "+01:00" style.
    [[nodiscard]] std::string to_string() const;

    friend constexpr bool operator==(UtcOffset, UtcOffset) = default;

private:
    std::chrono::minutes minutes_{60};
};

/// An instant together with the offset of the dataset's local clock.
struct LocalTime {
    std::chrono::sys_seconds instant{};
    UtcOffset offset{};

    /// Seconds since local midnight, in [0, 86400).
    [[nodiscard]] std::int64_t seconds_of_day() const;
    /// ISO-8601 local time with offset, e.g. 2017-11-18T14:30:00+01:00.
    [[nodiscard]] std::string iso8601() const;

    friend bool operator==(const LocalTime&, const LocalTime&) = default;
};

/// Parses the timestamp formats found in stored tweet streams:
/// the classic "Sat Nov 18 10:23:45 +0000 2017" and ISO-8601
/// ("2017-11-18T10:23:45Z", "2017-11-18 10:23:45+01:00").
/// Returns nullopt for anything else, including impossible dates.
std::optional<std::chrono::sys_seconds> parse_timestamp(std::string_view text);

// Two-hourly election-day windows.

struct TimeBucket {
    std::string_view label;
    int start_hour;  // inclusive
    int end_hour;    // exclusive; 24 for the last bucket
};

inline constexpr std::array<TimeBucket, 8> kTimeBuckets{{
    {"6-8", 6, 8},
    {"8-10", 8, 10},
    {"10-12", 10, 12},
    {"12-14", 12, 14},
    {"14-16", 14, 16},
    {"16-18", 16, 18},
    {"18-20", 18, 20},
    {"20-00", 20, 24},
}};

/// Index into kTimeBuckets, or nullopt for times before 06:00.
std::optional<std::size_t> bucket_index(std::int64_t seconds_of_day);

}  // namespace electionpulse
