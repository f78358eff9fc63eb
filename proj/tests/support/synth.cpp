#include "synth.hpp"

#include <array>
#include <random>
#include <sstream>

namespace ep_test {

namespace ep = electionpulse;

std::string sense_lexicon_text(std::size_t rows, std::size_t bad_rows, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::ostringstream out;
    out << "# POS\tID\tPosScore\tNegScore\tSynsetTerms\tGloss\n";
    const char pos_tags[] = {'n', 'v', 'a', 'r', 's'};
    const std::size_t stride = bad_rows ? rows / bad_rows : rows + 1;
    std::size_t bad = 0;
    for (std::size_t i = 0; i < rows; ++i) {
        const char pos = pos_tags[rng() % 5];
        if (bad < bad_rows && i % stride == stride / 2) {
            const auto lemma = "badrow" + std::to_string(bad);
            switch (bad % 5) {
            case 0: out << pos << "\t9" << i << "\t0.75\t0.5\t" << lemma << "#1\tsum above one\n"; break;
            case 1: out << pos << "\t9" << i << "\t-0.125\t0\t" << lemma << "#1\tnegative\n"; break;
            case 2: out << pos << "\t9" << i << "\t1.5\t0\t" << lemma << "#1\tabove one\n"; break;
            case 3: out << pos << "\t9" << i << "\tx\t0.25\t" << lemma << "#1\tnot a number\n"; break;
            default: out << pos << "\t9" << i << "\t0.25\t" << lemma << "#1\n"; break;
            }
            ++bad;
            continue;
        }
        // eighths, as in the published resource
        const int p = static_cast<int>(rng() % 9);
        const int n = static_cast<int>(rng() % static_cast<unsigned>(9 - p));
        out << pos << '\t' << 1000000 + i << '\t' << p / 8.0 << '\t' << n / 8.0 << "\tlemma" << i
            << "#" << 1 + rng() % 3 << "\tgloss " << i << '\n';
    }
    return out.str();
}

ep::ProcessedTweet make_tweet(std::string id, int hour, int minute,
                              std::vector<std::string> surface, std::vector<std::string> tokens) {
    using namespace std::chrono;
    ep::ProcessedTweet t;
    t.record_id = std::move(id);
    const ep::UtcOffset offset{minutes{60}};
    t.created_at = {sys_days{year{2017} / 11 / 18} + hours{hour} + minutes{minute} - minutes{60},
                    offset};
    t.bucket = ep::bucket_index(t.created_at.seconds_of_day());
    t.surface = std::move(surface);
    t.words = t.surface;
    t.tokens = tokens.empty() ? t.surface : std::move(tokens);
    t.raw_token_count = t.surface.size();
    return t;
}

SeriesFixture series_fixture(std::size_t n, std::uint64_t seed) {
    using ep::actors::Actor;
    using ep::actors::ActorKind;
    SeriesFixture fx;
    std::vector<Actor> list{
        {"cand_a", ActorKind::kCandidate, {"alpha"}, std::nullopt},
        {"cand_b", ActorKind::kCandidate, {"bravo", "bravo jones"}, std::nullopt},
        {"cand_c", ActorKind::kCandidate, {"charlie delta"}, std::nullopt},
        {"party_a", ActorKind::kParty, {"pta"}, std::nullopt},
        {"party_b", ActorKind::kParty, {"ptb"}, std::nullopt},
        {"party_c", ActorKind::kParty, {"ptc"}, std::nullopt},
        {"cand_a_party_a", ActorKind::kCombined, {}, std::pair{std::string("cand_a"), std::string("party_a")}},
        {"cand_b_party_b", ActorKind::kCombined, {}, std::pair{std::string("cand_b"), std::string("party_b")}},
        {"cand_c_party_c", ActorKind::kCombined, {}, std::pair{std::string("cand_c"), std::string("party_c")}},
    };
    fx.actors = ep::actors::ActorSet::from_actors(list);
    fx.scope = {"cand_a", "cand_b", "cand_c_party_c"};

    const std::vector<std::pair<std::string, std::vector<std::string>>> mentionable{
        {"cand_a", {"alpha"}}, {"cand_b", {"bravo"}}, {"cand_c", {"charlie", "delta"}},
        {"party_a", {"pta"}},  {"party_b", {"ptb"}},  {"party_c", {"ptc"}},
    };
    const std::vector<std::string> filler{"vote", "queue", "result", "calm", "late", "card",
                                          "reader", "ward", "crowd", "rain", "police", "agent"};
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < n; ++i) {
        // phrases are inserted as whole segments so they stay contiguous
        std::vector<std::vector<std::string>> segments;
        std::vector<std::string> tokens;
        ep::actors::IdSet planted;
        const int words = 3 + static_cast<int>(rng() % 6);
        for (int w = 0; w < words; ++w) {
            const auto& f = filler[rng() % filler.size()];
            segments.push_back({f});
            tokens.push_back(f);
        }
        // weighted towards zero or one mention so that sole mentions are common
        const std::size_t k = std::array<std::size_t, 8>{0, 1, 1, 1, 1, 2, 2, 3}[rng() % 8];
        for (std::size_t m = 0; m < k; ++m) {
            const auto& [id, phrase] = mentionable[rng() % mentionable.size()];
            planted.insert(id);
            const auto pos = static_cast<std::ptrdiff_t>(rng() % (segments.size() + 1));
            segments.insert(segments.begin() + pos, phrase);
        }
        std::vector<std::string> surface;
        for (const auto& seg : segments) surface.insert(surface.end(), seg.begin(), seg.end());
        for (const auto& [combo, parts] :
             std::vector<std::pair<std::string, std::pair<std::string, std::string>>>{
                 {"cand_a_party_a", {"cand_a", "party_a"}},
                 {"cand_b_party_b", {"cand_b", "party_b"}},
                 {"cand_c_party_c", {"cand_c", "party_c"}}})
            if (planted.contains(parts.first) && planted.contains(parts.second)) planted.insert(combo);

        const int hour = static_cast<int>(rng() % 24);
        const int minute = static_cast<int>(rng() % 60);
        fx.tweets.push_back(make_tweet("t" + std::to_string(i), hour, minute, surface, tokens));
        fx.planted.push_back(planted);
        // quarter steps keep means exactly representable
        fx.polarity.push_back(static_cast<double>(static_cast<int>(rng() % 9) - 4) / 4.0);
        fx.subjectivity.push_back(static_cast<double>(rng() % 5) / 4.0);
    }
    return fx;
}

}  // namespace ep_test
