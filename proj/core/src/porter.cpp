#include "electionpulse/porter.hpp"

#include <algorithm>
#include <initializer_list>
#include <span>

namespace electionpulse::preprocess {

namespace {

// Direct port of the reference implementation. The word lives in b[0..k];
// j marks the end of the stem when a suffix has been matched by ends().
class PorterStemmer {
public:
    explicit PorterStemmer(std::string_view word) : b_(word) {
        k_ = static_cast<int>(b_.size()) - 1;
    }

    std::string run() {
        if (k_ <= 1) return b_;  // strings of length 1 or 2 are left alone
        step1ab();
        if (k_ > 0) {
            step1c();
            step2();
            step3();
            step4();
            step5();
        }
        return b_.substr(0, static_cast<std::size_t>(k_ + 1));
    }

private:
    bool cons(int i) const {
        switch (b_[i]) {
        case 'a': case 'e': case 'i': case 'o': case 'u':
            return false;
        case 'y':
            return i == 0 ? true : !cons(i - 1);
        default:
            return true;
        }
    }

    // Number of VC sequences in b[0..j].
    int m() const {
        int n = 0;
        int i = 0;
        while (true) {
            if (i > j_) return n;
            if (!cons(i)) break;
            ++i;
        }
        ++i;
        while (true) {
            while (true) {
                if (i > j_) return n;
                if (cons(i)) break;
                ++i;
            }
            ++i;
            ++n;
            while (true) {
                if (i > j_) return n;
                if (!cons(i)) break;
                ++i;
            }
            ++i;
        }
    }

    bool vowel_in_stem() const {
        for (int i = 0; i <= j_; ++i)
            if (!cons(i)) return true;
        return false;
    }

    bool double_consonant(int j) const {
        if (j < 1) return false;
        if (b_[j] != b_[j - 1]) return false;
        return cons(j);
    }

    // consonant-vowel-consonant ending at i, final consonant not w, x or y
    bool cvc(int i) const {
        if (i < 2 || !cons(i) || cons(i - 1) || !cons(i - 2)) return false;
        const char ch = b_[i];
        return ch != 'w' && ch != 'x' && ch != 'y';
    }

    bool ends(std::string_view s) {
        const int length = static_cast<int>(s.size());
        if (s.back() != b_[k_]) return false;
        if (length > k_ + 1) return false;
        if (std::string_view(b_).substr(static_cast<std::size_t>(k_ - length + 1), s.size()) != s)
            return false;
        j_ = k_ - length;
        return true;
    }

    void set_to(std::string_view s) {
        b_.resize(static_cast<std::size_t>(j_ + 1));
        b_.append(s);
        k_ = j_ + static_cast<int>(s.size());
    }

    void replace_if_measured(std::string_view s) {
        if (m() > 0) set_to(s);
    }

    void truncate_to_k() { b_.resize(static_cast<std::size_t>(k_ + 1)); }

    // plurals and -ed / -ing
    void step1ab() {
        if (b_[k_] == 's') {
            if (ends("sses")) {
                k_ -= 2;
            } else if (ends("ies")) {
                set_to("i");
            } else if (b_[k_ - 1] != 's') {
                --k_;
            }
            truncate_to_k();
        }
        if (ends("eed")) {
            if (m() > 0) {
                --k_;
                truncate_to_k();
            }
        } else if ((ends("ed") || ends("ing")) && vowel_in_stem()) {
            k_ = j_;
            truncate_to_k();
            if (ends("at")) {
                set_to("ate");
            } else if (ends("bl")) {
                set_to("ble");
            } else if (ends("iz")) {
                set_to("ize");
            } else if (double_consonant(k_)) {
                --k_;
                const char ch = b_[k_];
                if (ch == 'l' || ch == 's' || ch == 'z') ++k_;
                truncate_to_k();
            } else {
                j_ = k_;
                if (m() == 1 && cvc(k_)) set_to("e");
            }
        }
    }

    // terminal y -> i when there is another vowel in the stem
    void step1c() {
        if (ends("y") && vowel_in_stem()) b_[k_] = 'i';
    }

    // double suffixes -> single ones
    void step2() {
        if (k_ < 1) return;
        struct Rule {
            std::string_view suffix;
            std::string_view replacement;
        };
        static constexpr Rule a[] = {{"ational", "ate"}, {"tional", "tion"}};
        static constexpr Rule c[] = {{"enci", "ence"}, {"anci", "ance"}};
        static constexpr Rule e[] = {{"izer", "ize"}};
        static constexpr Rule l[] = {
            {"bli", "ble"}, {"alli", "al"}, {"entli", "ent"}, {"eli", "e"}, {"ousli", "ous"}};
        static constexpr Rule o[] = {{"ization", "ize"}, {"ation", "ate"}, {"ator", "ate"}};
        static constexpr Rule s[] = {
            {"alism", "al"}, {"iveness", "ive"}, {"fulness", "ful"}, {"ousness", "ous"}};
        static constexpr Rule t[] = {{"aliti", "al"}, {"iviti", "ive"}, {"biliti", "ble"}};
        static constexpr Rule g[] = {{"logi", "log"}};

        auto apply = [this](std::span<const Rule> rules) {
            for (const auto& r : rules) {
                if (ends(r.suffix)) {
                    replace_if_measured(r.replacement);
                    return;
                }
            }
        };
        switch (b_[k_ - 1]) {
        case 'a': apply(a); break;
        case 'c': apply(c); break;
        case 'e': apply(e); break;
        case 'l': apply(l); break;
        case 'o': apply(o); break;
        case 's': apply(s); break;
        case 't': apply(t); break;
        case 'g': apply(g); break;
        default: break;
        }
    }

    // -ic-, -full, -ness etc.
    void step3() {
        struct Rule {
            std::string_view suffix;
            std::string_view replacement;
        };
        static constexpr Rule e[] = {{"icate", "ic"}, {"ative", ""}, {"alize", "al"}};
        static constexpr Rule i[] = {{"iciti", "ic"}};
        static constexpr Rule l[] = {{"ical", "ic"}, {"ful", ""}};
        static constexpr Rule s[] = {{"ness", ""}};

        auto apply = [this](std::span<const Rule> rules) {
            for (const auto& r : rules) {
                if (ends(r.suffix)) {
                    replace_if_measured(r.replacement);
                    return;
                }
            }
        };
        switch (b_[k_]) {
        case 'e': apply(e); break;
        case 'i': apply(i); break;
        case 'l': apply(l); break;
        case 's': apply(s); break;
        default: break;
        }
    }

    // -ant, -ence etc. in context <c>vcvc<v>
    void step4() {
        if (k_ < 1) return;
        auto first_match = [this](std::initializer_list<std::string_view> suffixes) {
            for (auto sfx : suffixes)
                if (ends(sfx)) return true;
            return false;
        };
        bool matched = false;
        switch (b_[k_ - 1]) {
        case 'a': matched = first_match({"al"}); break;
        case 'c': matched = first_match({"ance", "ence"}); break;
        case 'e': matched = first_match({"er"}); break;
        case 'i': matched = first_match({"ic"}); break;
        case 'l': matched = first_match({"able", "ible"}); break;
        case 'n': matched = first_match({"ant", "ement", "ment", "ent"}); break;
        case 'o':
            if (ends("ion") && j_ >= 0 && (b_[j_] == 's' || b_[j_] == 't')) {
                matched = true;
            } else {
                matched = ends("ou");
            }
            break;
        case 's': matched = first_match({"ism"}); break;
        case 't': matched = first_match({"ate", "iti"}); break;
        case 'u': matched = first_match({"ous"}); break;
        case 'v': matched = first_match({"ive"}); break;
        case 'z': matched = first_match({"ize"}); break;
        default: break;
        }
        if (matched && m() > 1) {
            k_ = j_;
            truncate_to_k();
        }
    }

    // final -e and -ll
    void step5() {
        j_ = k_;
        if (b_[k_] == 'e') {
            const int a = m();
            if (a > 1 || (a == 1 && !cvc(k_ - 1))) --k_;
        }
        if (b_[k_] == 'l' && double_consonant(k_) && m() > 1) --k_;
        truncate_to_k();
    }

    std::string b_;
    int k_ = 0;
    int j_ = 0;
};

}  // namespace

std::string stem(std::string_view token) {
    if (token.empty() ||
        !std::all_of(token.begin(), token.end(), [](char c) { return c >= 'a' && c <= 'z'; }))
        return std::string(token);
    return PorterStemmer(token).run();
}

std::string stem_fixed(std::string_view token) {
    std::string current = stem(token);
    // each pass shortens the word or only rewrites a final y, so this settles fast
    for (int i = 0; i < 16; ++i) {
        auto next = stem(current);
        if (next == current) break;
        current = std::move(next);
    }
    return current;
}

}  // namespace electionpulse::preprocess
