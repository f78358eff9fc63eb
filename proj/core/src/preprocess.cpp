#include "electionpulse/preprocess.hpp"

#include "electionpulse/common.hpp"
#include "electionpulse/ini.hpp"

#include <algorithm>
#include <fstream>
#include <istream>

namespace electionpulse::preprocess {

namespace {

// Decodes one UTF-8 sequence at s[i]. Invalid or truncated sequences decode
// to U+FFFD with length 1 so callers always make progress.
char32_t decode(std::string_view s, std::size_t i, std::size_t& len) {
    const auto b0 = static_cast<unsigned char>(s[i]);
    auto cont = [&](std::size_t k) -> int {
        if (i + k >= s.size()) return -1;
        const auto b = static_cast<unsigned char>(s[i + k]);
        return (b & 0xC0) == 0x80 ? (b & 0x3F) : -1;
    };
    len = 1;
    if (b0 < 0x80) return b0;
    if ((b0 & 0xE0) == 0xC0) {
        const int c1 = cont(1);
        if (c1 < 0 || b0 < 0xC2) return 0xFFFD;
        len = 2;
        return static_cast<char32_t>(((b0 & 0x1F) << 6) | c1);
    }
    if ((b0 & 0xF0) == 0xE0) {
        const int c1 = cont(1), c2 = cont(2);
        if (c1 < 0 || c2 < 0) return 0xFFFD;
        const auto cp = static_cast<char32_t>(((b0 & 0x0F) << 12) | (c1 << 6) | c2);
        if (cp < 0x800 || (cp >= 0xD800 && cp <= 0xDFFF)) return 0xFFFD;
        len = 3;
        return cp;
    }
    if ((b0 & 0xF8) == 0xF0) {
        const int c1 = cont(1), c2 = cont(2), c3 = cont(3);
        if (c1 < 0 || c2 < 0 || c3 < 0) return 0xFFFD;
        const auto cp = static_cast<char32_t>(((b0 & 0x07) << 18) | (c1 << 12) | (c2 << 6) | c3);
        if (cp < 0x10000 || cp > 0x10FFFF) return 0xFFFD;
        len = 4;
        return cp;
    }
    return 0xFFFD;
}

void encode(char32_t cp, std::string& out) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

bool is_unicode_space(char32_t cp) {
    return cp == 0x85 || cp == 0xA0 || cp == 0x1680 || (cp >= 0x2000 && cp <= 0x200A) ||
           cp == 0x2028 || cp == 0x2029 || cp == 0x202F || cp == 0x205F || cp == 0x3000;
}

bool is_ascii_space(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

// Latin letters and combining marks (Igbo tone and dot-below marks live here).
bool is_latin_letter(char32_t cp) {
    return (cp >= 0xC0 && cp <= 0x24F && cp != 0xD7 && cp != 0xF7) ||
           (cp >= 0x300 && cp <= 0x36F) || (cp >= 0x1E00 && cp <= 0x1EFF);
}

char32_t lower(char32_t cp) {
    if (cp >= 'A' && cp <= 'Z') return cp + 32;
    if (cp < 0x80) return cp;
    if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 0x20;
    if ((cp >= 0x100 && cp <= 0x137) || (cp >= 0x14A && cp <= 0x177))
        return (cp % 2 == 0) ? cp + 1 : cp;
    if ((cp >= 0x139 && cp <= 0x148) || (cp >= 0x179 && cp <= 0x17E))
        return (cp % 2 == 1) ? cp + 1 : cp;
    if (cp == 0x178) return 0xFF;
    if ((cp >= 0x1E00 && cp <= 0x1E95) || (cp >= 0x1EA0 && cp <= 0x1EFF))
        return (cp % 2 == 0) ? cp + 1 : cp;
    return cp;
}

bool starts_with_ci(std::string_view s, std::size_t i, std::string_view prefix) {
    if (s.size() - i < prefix.size()) return false;
    for (std::size_t k = 0; k < prefix.size(); ++k) {
        char c = s[i + k];
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c + 32);
        if (c != prefix[k]) return false;
    }
    return true;
}

bool is_handle_char(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
           c == '_';
}

bool is_ascii_alnum(char c) {
    return is_handle_char(c) && c != '_';
}

bool is_ascii_punct(char c) {
    const auto u = static_cast<unsigned char>(c);
    return u >= 0x21 && u <= 0x7E && !is_ascii_alnum(c);
}

std::string decode_entities(std::string_view text) {
    static constexpr std::pair<std::string_view, char> kEntities[] = {
        {"&amp;", '&'}, {"&lt;", '<'}, {"&gt;", '>'}, {"&quot;", '"'}, {"&#39;", '\''}};
    std::string out;
    out.reserve(text.size());
    for (std::size_t i = 0; i < text.size();) {
        bool replaced = false;
        if (text[i] == '&') {
            for (auto [entity, ch] : kEntities) {
                if (text.substr(i, entity.size()) == entity) {
                    out.push_back(ch);
                    i += entity.size();
                    replaced = true;
                    break;
                }
            }
        }
        if (!replaced) out.push_back(text[i++]);
    }
    return out;
}

std::string collapse_whitespace(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    bool pending_space = false;
    for (char c : s) {
        if (c == ' ') {
            pending_space = !out.empty();
            continue;
        }
        if (pending_space) out.push_back(' ');
        pending_space = false;
        out.push_back(c);
    }
    return out;
}

std::string strip_punct(std::string_view token) {
    std::size_t b = 0;
    std::size_t e = token.size();
    while (b < e && is_ascii_punct(token[b])) ++b;
    while (e > b && is_ascii_punct(token[e - 1])) --e;
    return std::string(token.substr(b, e - b));
}

bool lowercase_letters_only(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= 'a' && c <= 'z'; });
}

}  // namespace

std::string to_lower(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (std::size_t i = 0; i < text.size();) {
        std::size_t len = 0;
        const char32_t cp = decode(text, i, len);
        if (cp == 0xFFFD && len == 1 && static_cast<unsigned char>(text[i]) >= 0x80) {
            out.push_back(text[i]);  // leave undecodable bytes alone
        } else {
            encode(lower(cp), out);
        }
        i += len;
    }
    return out;
}

std::string clean(std::string_view raw) {
    const std::string text = decode_entities(raw);
    const std::string_view s = text;
    std::string out;
    out.reserve(s.size());
    for (std::size_t i = 0; i < s.size();) {
        const bool at_boundary = i == 0 || !is_ascii_alnum(s[i - 1]);
        if (starts_with_ci(s, i, "http://") || starts_with_ci(s, i, "https://") ||
            (at_boundary && starts_with_ci(s, i, "www."))) {
            while (i < s.size() && !is_ascii_space(s[i])) ++i;
            continue;
        }
        const char c = s[i];
        if (c == '@' && i + 1 < s.size() && is_handle_char(s[i + 1])) {
            ++i;
            while (i < s.size() && is_handle_char(s[i])) ++i;
            continue;
        }
        if (c == '#') {
            ++i;
            continue;
        }
        if (static_cast<unsigned char>(c) < 0x80) {
            if (is_ascii_space(c)) {
                out.push_back(' ');
            } else if (static_cast<unsigned char>(c) >= 0x20 && c != 0x7F) {
                out.push_back(c >= 'A' && c <= 'Z' ? static_cast<char>(c + 32) : c);
            }
            ++i;
            continue;
        }
        std::size_t len = 0;
        const char32_t cp = decode(s, i, len);
        i += len;
        if (is_unicode_space(cp)) {
            out.push_back(' ');
        } else if (cp == 0x2018 || cp == 0x2019 || cp == 0x02BC) {
            out.push_back('\'');
        } else if (cp == 0x201C || cp == 0x201D) {
            out.push_back('"');
        } else if (cp == 0x2013 || cp == 0x2014) {
            out.push_back('-');
        } else if (cp == 0x2026) {
            out.append("...");
        } else if (is_latin_letter(cp)) {
            encode(lower(cp), out);
        }
        // everything else (emoji, pictographs, other symbols) is dropped
    }
    return collapse_whitespace(out);
}

bool is_retweet(const TweetRecord& record) {
    if (record.is_retweet) return true;
    const auto text = ini::trim(record.text);
    return text.starts_with("RT @");
}

std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> tokens;
    std::string current;
    auto flush = [&] {
        if (current.empty()) return;
        auto t = strip_punct(current);
        if (!t.empty()) tokens.push_back(std::move(t));
        current.clear();
    };
    for (std::size_t i = 0; i < text.size();) {
        const char c = text[i];
        if (static_cast<unsigned char>(c) < 0x80) {
            if (is_ascii_space(c)) {
                flush();
            } else {
                current.push_back(c);
            }
            ++i;
            continue;
        }
        std::size_t len = 0;
        const char32_t cp = decode(text, i, len);
        if (is_unicode_space(cp)) {
            flush();
        } else {
            current.append(text.substr(i, len));
        }
        i += len;
    }
    flush();
    return tokens;
}

StopwordSet::StopwordSet(std::set<std::string> base) {
    for (const auto& w : base) base_.insert(to_lower(w));
}

StopwordSet StopwordSet::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open stopword file '" + path.string() + "'");
    return parse(in);
}

StopwordSet StopwordSet::parse(std::istream& in) {
    StopwordSet set;
    std::string line;
    while (std::getline(in, line)) {
        auto view = std::string_view(line);
        if (auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
        view = ini::trim(view);
        if (!view.empty()) set.base_.insert(to_lower(view));
    }
    return set;
}

void StopwordSet::add_extra(std::string_view word) {
    auto lowered = to_lower(ini::trim(word));
    if (!lowered.empty()) extra_.insert(std::move(lowered));
}

bool StopwordSet::contains(std::string_view word) const {
    const auto lowered = to_lower(word);
    if (base_.contains(lowered)) return true;
    return use_extra_ && extra_.contains(lowered);
}

Pipeline::Pipeline(PipelineConfig config) : config_(std::move(config)) {
    if (config_.spellcheck && config_.stem) {
        for (const auto& w : config_.dictionary.words())
            if (lowercase_letters_only(w)) dictionary_stems_.insert(stem_fixed(w));
        for (const auto& w : config_.protected_words)
            if (lowercase_letters_only(w)) dictionary_stems_.insert(stem_fixed(w));
    }
}

std::string Pipeline::correct(const std::string& token) const {
    const auto& dict = config_.dictionary;
    if (!config_.spellcheck || dict.empty()) return token;
    if (token.size() < config_.min_correct_length || !lowercase_letters_only(token)) return token;
    if (config_.protected_words.contains(token) || dict.contains(token)) return token;
    if (dictionary_stems_.contains(token)) return token;
    return dict.correct(token);
}

PipelineResult Pipeline::run(const TweetRecord& record) const {
    if (is_retweet(record)) return {std::nullopt, RejectReason::kRetweet};

    ProcessedTweet tweet;
    tweet.record_id = record.id;
    tweet.created_at = record.created_at;
    tweet.bucket = bucket_index(record.created_at.seconds_of_day());
    tweet.surface = tokenize(clean(record.text));
    tweet.raw_token_count = tweet.surface.size();

    tweet.words.reserve(tweet.surface.size());
    for (const auto& t : tweet.surface) tweet.words.push_back(correct(t));

    for (const auto& w : tweet.words) {
        if (config_.stopwords.contains(w)) continue;
        auto t = config_.stem ? stem_fixed(w) : w;
        if (t.empty() || config_.stopwords.contains(t)) continue;
        tweet.tokens.push_back(std::move(t));
    }
    if (tweet.tokens.empty()) return {std::nullopt, RejectReason::kEmpty};
    return {std::move(tweet), RejectReason::kNone};
}

}  // namespace electionpulse::preprocess
