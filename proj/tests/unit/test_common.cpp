#include "electionpulse/common.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace electionpulse;
using namespace std::chrono;

namespace {

LocalTime local(std::string_view ts, UtcOffset off = UtcOffset{}) {
    auto t = parse_timestamp(ts);
    EXPECT_TRUE(t.has_value()) << ts;
    return {t.value_or(sys_seconds{}), off};
}

std::string_view label_at(std::string_view ts) {
    auto idx = bucket_index(local(ts, UtcOffset{minutes{0}}).seconds_of_day());
    return idx ? kTimeBuckets[*idx].label : "out_of_range";
}

}  // namespace

TEST(Timestamp, ClassicTwitterFormat) {
    auto t = parse_timestamp("Sat Nov 18 10:23:45 +0000 2017");
    ASSERT_TRUE(t);
    EXPECT_EQ(*t, sys_days{year{2017} / 11 / 18} + hours{10} + minutes{23} + seconds{45});
}

TEST(Timestamp, IsoVariants) {
    const auto expected = sys_days{year{2017} / 11 / 18} + hours{9} + minutes{0};
    EXPECT_EQ(parse_timestamp("2017-11-18T09:00:00Z"), expected);
    EXPECT_EQ(parse_timestamp("2017-11-18 10:00:00+01:00"), expected);
    EXPECT_EQ(parse_timestamp("2017-11-18T10:00:00.250+0100"), expected);
}

TEST(Timestamp, RejectsGarbage) {
    EXPECT_FALSE(parse_timestamp(""));
    EXPECT_FALSE(parse_timestamp("yesterday"));
    EXPECT_FALSE(parse_timestamp("2017-02-30T10:00:00Z"));
    EXPECT_FALSE(parse_timestamp("Sat Foo 18 10:23:45 +0000 2017"));
    EXPECT_FALSE(parse_timestamp("2017-11-18T25:00:00Z"));
}

TEST(UtcOffset, ParseAndFormat) {
    EXPECT_EQ(UtcOffset::parse("+01:00").minutes(), minutes{60});
    EXPECT_EQ(UtcOffset::parse("-0530").minutes(), minutes{-330});
    EXPECT_EQ(UtcOffset::parse("UTC").minutes(), minutes{0});
    EXPECT_EQ(UtcOffset::parse("UTC+01:00").minutes(), minutes{60});
    EXPECT_EQ(UtcOffset{}.to_string(), "+01:00");
    EXPECT_EQ(UtcOffset{minutes{-330}}.to_string(), "-05:30");
    EXPECT_THROW(UtcOffset::parse("Africa/Lagos"), ConfigError);
}

TEST(LocalTime, ShiftsIntoConfiguredZone) {
    auto t = local("Sat Nov 18 23:30:00 +0000 2017");
    EXPECT_EQ(t.iso8601(), "2017-11-19T00:30:00+01:00");
    EXPECT_EQ(t.seconds_of_day(), 30 * 60);
}

TEST(Buckets, Boundaries) {
    EXPECT_EQ(label_at("2017-11-18T06:00:00Z"), "6-8");
    EXPECT_EQ(label_at("2017-11-18T07:59:59Z"), "6-8");
    EXPECT_EQ(label_at("2017-11-18T08:00:00Z"), "8-10");
    EXPECT_EQ(label_at("2017-11-18T20:00:00Z"), "20-00");
    EXPECT_EQ(label_at("2017-11-18T23:59:59Z"), "20-00");
    EXPECT_EQ(label_at("2017-11-18T05:59:59Z"), "out_of_range");
    EXPECT_EQ(label_at("2017-11-18T00:00:00Z"), "out_of_range");
}

TEST(Buckets, CoverTheDayWithoutOverlap) {
    int previous_end = 6;
    for (const auto& b : kTimeBuckets) {
        EXPECT_EQ(b.start_hour, previous_end);
        EXPECT_EQ(b.end_hour - b.start_hour, b.end_hour == 24 ? 4 : 2);
        previous_end = b.end_hour;
    }
    EXPECT_EQ(previous_end, 24);
}

TEST(Buckets, EverySecondMapsToItsHour) {
    for (std::int64_t s = 0; s < 86400; s += 7) {
        const auto idx = bucket_index(s);
        const int hour = static_cast<int>(s / 3600);
        if (hour < 6) {
            EXPECT_FALSE(idx) << s;
        } else {
            ASSERT_TRUE(idx) << s;
            EXPECT_GE(hour, kTimeBuckets[*idx].start_hour);
            EXPECT_LT(hour, kTimeBuckets[*idx].end_hour);
        }
    }
    EXPECT_FALSE(bucket_index(-1));
    EXPECT_FALSE(bucket_index(86400));
}
