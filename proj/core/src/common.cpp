#include "electionpulse/common.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>

namespace electionpulse {

namespace {

using namespace std::chrono;

bool parse_int(std::string_view s, int& out) {
    if (s.empty()) return false;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && ptr == s.data() + s.size();
}

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

// "+0100", "+01:00", "-05", "Z"
std::optional<minutes> parse_offset_suffix(std::string_view s) {
    if (s == "Z" || s == "z") return minutes{0};
    if (s.size() < 2 || (s[0] != '+' && s[0] != '-')) return std::nullopt;
    const int sign = s[0] == '-' ? -1 : 1;
    std::string digits;
    for (char c : s.substr(1)) {
        if (c == ':') continue;
        if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
        digits.push_back(c);
    }
    int h = 0;
    int m = 0;
    if (digits.size() == 1 || digits.size() == 2) {
        if (!parse_int(digits, h)) return std::nullopt;
    } else if (digits.size() == 4) {
        if (!parse_int(std::string_view(digits).substr(0, 2), h) ||
            !parse_int(std::string_view(digits).substr(2, 2), m))
            return std::nullopt;
    } else {
        return std::nullopt;
    }
    if (h > 14 || m > 59) return std::nullopt;
    return minutes{sign * (h * 60 + m)};
}

std::optional<sys_seconds> make_instant(int y, int mo, int d, int hh, int mm, int ss,
                                        minutes offset) {
    const year_month_day ymd{year{y}, month{static_cast<unsigned>(mo)},
                             day{static_cast<unsigned>(d)}};
    if (!ymd.ok() || hh < 0 || hh > 23 || mm < 0 || mm > 59 || ss < 0 || ss > 60)
        return std::nullopt;
    return sys_seconds{sys_days{ymd}} + hours{hh} + minutes{mm} + seconds{ss} - offset;
}

// hh:mm:ss
bool parse_clock(std::string_view s, int& hh, int& mm, int& ss) {
    if (s.size() != 8 || s[2] != ':' || s[5] != ':') return false;
    return parse_int(s.substr(0, 2), hh) && parse_int(s.substr(3, 2), mm) &&
           parse_int(s.substr(6, 2), ss);
}

int month_from_abbrev(std::string_view s) {
    static constexpr std::string_view names[] = {"Jan", "Feb", "Mar", "Apr", "May", "Jun",
                                                 "Jul", "Aug", "Sep", "Oct", "Nov", "Dec"};
    for (int i = 0; i < 12; ++i)
        if (names[i] == s) return i + 1;
    return 0;
}

// Sat Nov 18 10:23:45 +0000 2017
std::optional<sys_seconds> parse_classic(std::string_view text) {
    std::string_view parts[6];
    std::size_t n = 0;
    std::size_t pos = 0;
    while (pos < text.size() && n < 6) {
        while (pos < text.size() && text[pos] == ' ') ++pos;
        if (pos >= text.size()) break;
        auto end = text.find(' ', pos);
        if (end == std::string_view::npos) end = text.size();
        parts[n++] = text.substr(pos, end - pos);
        pos = end;
    }
    while (pos < text.size() && text[pos] == ' ') ++pos;
    if (n != 6 || pos != text.size()) return std::nullopt;
    const int mo = month_from_abbrev(parts[1]);
    int d = 0, y = 0, hh = 0, mm = 0, ss = 0;
    if (mo == 0 || !parse_int(parts[2], d) || !parse_clock(parts[3], hh, mm, ss) ||
        !all_digits(parts[5]) || !parse_int(parts[5], y))
        return std::nullopt;
    auto off = parse_offset_suffix(parts[4]);
    if (!off) return std::nullopt;
    return make_instant(y, mo, d, hh, mm, ss, *off);
}

// 2017-11-18T10:23:45Z, 2017-11-18 10:23:45+01:00, fractional seconds dropped
std::optional<sys_seconds> parse_iso(std::string_view text) {
    if (text.size() < 19 || text[4] != '-' || text[7] != '-' ||
        (text[10] != 'T' && text[10] != ' '))
        return std::nullopt;
    int y = 0, mo = 0, d = 0, hh = 0, mm = 0, ss = 0;
    if (!all_digits(text.substr(0, 4)) || !parse_int(text.substr(0, 4), y) ||
        !parse_int(text.substr(5, 2), mo) || !parse_int(text.substr(8, 2), d) ||
        !parse_clock(text.substr(11, 8), hh, mm, ss))
        return std::nullopt;
    auto rest = text.substr(19);
    if (!rest.empty() && rest[0] == '.') {
        std::size_t i = 1;
        while (i < rest.size() && std::isdigit(static_cast<unsigned char>(rest[i]))) ++i;
        if (i == 1) return std::nullopt;
        rest = rest.substr(i);
    }
    minutes off{0};
    if (!rest.empty()) {
        auto parsed = parse_offset_suffix(rest);
        if (!parsed) return std::nullopt;
        off = *parsed;
    }
    return make_instant(y, mo, d, hh, mm, ss, off);
}

}  // namespace

UtcOffset UtcOffset::parse(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    if (s.starts_with("UTC") || s.starts_with("GMT")) s.remove_prefix(3);
    if (s.empty()) return UtcOffset{std::chrono::minutes{0}};
    auto parsed = parse_offset_suffix(s);
    if (!parsed) throw ConfigError("invalid UTC offset '" + std::string(text) + "'");
    return UtcOffset{*parsed};
}

std::string UtcOffset::to_string() const {
    const auto total = minutes_.count();
    const auto abs = total < 0 ? -total : total;
    char buf[8];
    std::snprintf(buf, sizeof buf, "%c%02d:%02d", total < 0 ? '-' : '+',
                  static_cast<int>(abs / 60), static_cast<int>(abs % 60));
    return buf;
}

std::int64_t LocalTime::seconds_of_day() const {
    const auto local = instant + offset.minutes();
    const auto since_midnight = local - floor<days>(local);
    return since_midnight.count();
}

std::string LocalTime::iso8601() const {
    const auto local = instant + offset.minutes();
    const auto day_start = floor<days>(local);
    const year_month_day ymd{day_start};
    const hh_mm_ss clock{local - day_start};
    char buf[32];
    std::snprintf(buf, sizeof buf, "%04d-%02u-%02uT%02d:%02d:%02d", static_cast<int>(ymd.year()),
                  static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()),
                  static_cast<int>(clock.hours().count()),
                  static_cast<int>(clock.minutes().count()),
                  static_cast<int>(clock.seconds().count()));
    return std::string(buf) + offset.to_string();
}

std::optional<sys_seconds> parse_timestamp(std::string_view text) {
    if (text.empty()) return std::nullopt;
    if (std::isdigit(static_cast<unsigned char>(text[0]))) return parse_iso(text);
    return parse_classic(text);
}

std::optional<std::size_t> bucket_index(std::int64_t seconds_of_day) {
    if (seconds_of_day < 0 || seconds_of_day >= 86400) return std::nullopt;
    const auto hour = static_cast<int>(seconds_of_day / 3600);
    for (std::size_t i = 0; i < kTimeBuckets.size(); ++i)
        if (hour >= kTimeBuckets[i].start_hour && hour < kTimeBuckets[i].end_hour) return i;
    return std::nullopt;
}

}  // namespace electionpulse
