#include "electionpulse/actors.hpp"
#include "electionpulse/common.hpp"
#include "electionpulse/ini.hpp"
#include "electionpulse/preprocess.hpp"

#include "synth.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <sstream>

using namespace electionpulse;
using namespace electionpulse::actors;

namespace {

Actor candidate(std::string id, std::vector<std::string> aliases) {
    return Actor{std::move(id), ActorKind::kCandidate, std::move(aliases), std::nullopt};
}

Actor party(std::string id, std::vector<std::string> aliases) {
    return Actor{std::move(id), ActorKind::kParty, std::move(aliases), std::nullopt};
}

Actor combined(std::string id, std::string cand, std::string p) {
    return Actor{std::move(id), ActorKind::kCombined, {}, std::pair{std::move(cand), std::move(p)}};
}

ActorSet small_set() {
    return ActorSet::from_actors({
        candidate("willie_obiano", {"obiano", "willie obiano"}),
        candidate("tony_nwoye", {"nwoye"}),
        party("apga", {"apga"}),
        party("apc", {"apc"}),
        party("pdp", {"pdp"}),
        party("upp", {"upp"}),
        combined("willie_obiano_apga", "willie_obiano", "apga"),
        combined("tony_nwoye_apc", "tony_nwoye", "apc"),
    });
}

IdSet ids(std::initializer_list<const char*> list) {
    IdSet s;
    for (const auto* x : list) s.insert(x);
    return s;
}

}  // namespace

TEST(MatchText, Examples) {
    const auto set = small_set();
    EXPECT_EQ(match_text("obiano wins apga sweeps", set),
              ids({"willie_obiano", "apga", "willie_obiano_apga"}));
    EXPECT_EQ(match_text("nothing to see here", set), IdSet{});
    EXPECT_EQ(match_text("APGA, UPP commend timely distribution", set), ids({"apga", "upp"}));
    EXPECT_EQ(match_text("@obiano no mention", set), IdSet{});
    EXPECT_EQ(match_text("#Obiano trends", set), ids({"willie_obiano"}));
    EXPECT_EQ(match_text("willie-obiano and obianos", set), IdSet{});
}

TEST(MatchText, MultiWordAliasesAreContiguous) {
    const auto set = ActorSet::from_actors({candidate("oo", {"oseloka obaze"})});
    EXPECT_EQ(match_text("Oseloka Obaze speaks", set), ids({"oo"}));
    EXPECT_EQ(match_text("oseloka met obaze", set), IdSet{});
}

TEST(MatchActors, UsesSurfaceStream) {
    const auto set = small_set();
    auto t = ep_test::make_tweet("1", 9, 0, {"obiano", "rallies"}, {"obiano", "ralli"});
    EXPECT_EQ(match_actors(t, set), ids({"willie_obiano"}));
    t = ep_test::make_tweet("2", 9, 0, {"rallies"}, {"obiano"});
    EXPECT_TRUE(match_actors(t, set).empty());
}

TEST(SoleMention, Rules) {
    const auto set = small_set();
    const auto plain_scope = ids({"willie_obiano", "tony_nwoye", "apga", "pdp"});
    EXPECT_EQ(sole_mention(ids({"willie_obiano"}), set, plain_scope), "willie_obiano");
    EXPECT_EQ(sole_mention(ids({"willie_obiano", "pdp"}), set, plain_scope), std::nullopt);
    EXPECT_EQ(sole_mention(ids({"willie_obiano", "apga", "willie_obiano_apga"}), set, plain_scope),
              std::nullopt);
    EXPECT_EQ(sole_mention({}, set, plain_scope), std::nullopt);
    // actors outside the scope are ignored
    EXPECT_EQ(sole_mention(ids({"willie_obiano", "upp"}), set, plain_scope), "willie_obiano");

    const auto with_combined = ids({"willie_obiano", "tony_nwoye", "willie_obiano_apga"});
    EXPECT_EQ(sole_mention(ids({"willie_obiano", "apga", "willie_obiano_apga"}), set, with_combined),
              "willie_obiano_apga");
    EXPECT_EQ(sole_mention(ids({"willie_obiano", "apga", "willie_obiano_apga", "tony_nwoye"}), set,
                           with_combined),
              std::nullopt);
}

TEST(Validate, EveryViolationNamed) {
    const std::vector<Actor> bad{
        candidate("a", {}),
        candidate("b", {"Upper"}),
        candidate("c", {"shared"}),
        candidate("d", {"shared"}),
        party("p", {"p"}),
        combined("x", "a", "missing_party"),
        combined("y", "p", "a"),
    };
    const auto errors = ActorSet::validate(bad);
    auto mentions = [&](const std::string& needle) {
        return std::any_of(errors.begin(), errors.end(),
                           [&](const std::string& e) { return e.find(needle) != std::string::npos; });
    };
    EXPECT_TRUE(mentions("'a' has no aliases"));
    EXPECT_TRUE(mentions("'Upper'"));
    EXPECT_TRUE(mentions("'shared'"));
    EXPECT_TRUE(mentions("missing party 'missing_party'"));
    EXPECT_TRUE(mentions("'p' is not a candidate"));
    EXPECT_TRUE(mentions("'a' is not a party"));
    EXPECT_THROW(ActorSet::from_actors(bad), ConfigError);
    try {
        ActorSet::from_actors(bad);
    } catch (const ConfigError& e) {
        EXPECT_NE(std::string(e.what()).find("missing_party"), std::string::npos);
    }
}

TEST(Validate, SameAliasAcrossKindsAllowed) {
    EXPECT_NO_THROW(ActorSet::from_actors({candidate("c", {"apga"}), party("p", {"apga"})}));
}

TEST(ActorSet, FixtureLoads) {
    const auto set = ActorSet::load(EP_FIXTURE_DIR "/actors.ini");
    EXPECT_EQ(set.actors().size(), 15u);
    ASSERT_NE(set.find("obiano_apga"), nullptr);
    EXPECT_EQ(set.find("obiano_apga")->kind, ActorKind::kCombined);
    EXPECT_TRUE(set.alias_words().contains("willie"));
    EXPECT_EQ(set.find("nope"), nullptr);
}

TEST(ActorSet, DocumentDiagnostics) {
    std::istringstream in("[actor a]\nkind = wizard\naliases = a\n[other]\nx = 1\n[actor b]\naliases = b\n");
    const auto doc = ini::Document::parse(in, "actors.ini");
    std::vector<std::string> diags;
    ActorSet::parse_document(doc, diags);
    EXPECT_EQ(diags.size(), 3u);
}

TEST(GroupCounts, EmptyAndBasic) {
    const auto set = small_set();
    const auto zero = group_counts({}, set);
    EXPECT_EQ(zero.size(), set.actors().size());
    for (const auto& [id, n] : zero) EXPECT_EQ(n, 0u) << id;

    const std::vector<ProcessedTweet> tweets{
        ep_test::make_tweet("1", 9, 0, {"obiano", "apga"}),
        ep_test::make_tweet("2", 9, 0, {"obiano"}),
        ep_test::make_tweet("3", 9, 0, {"apga", "pdp"}),
    };
    const auto counts = group_counts(build_mentions(tweets, set), set);
    EXPECT_EQ(counts.at("willie_obiano"), 2u);
    EXPECT_EQ(counts.at("apga"), 2u);
    EXPECT_EQ(counts.at("pdp"), 1u);
    EXPECT_EQ(counts.at("willie_obiano_apga"), 1u);
}

TEST(Properties, MonotonicityCombinedBoundAndSoleMention) {
    const std::vector<std::string> words{"obiano", "willie", "nwoye", "apga", "apc", "pdp", "upp",
                                         "vote", "awka", "rally", "oseloka", "tony"};
    std::mt19937_64 rng(21);
    std::vector<ProcessedTweet> tweets;
    for (int i = 0; i < 400; ++i) {
        std::vector<std::string> surface;
        const int len = 1 + static_cast<int>(rng() % 7);
        for (int k = 0; k < len; ++k) surface.push_back(words[rng() % words.size()]);
        tweets.push_back(ep_test::make_tweet(std::to_string(i), 9, 0, surface));
    }
    const auto base = small_set();
    const auto matrix = build_mentions(tweets, base);
    const auto counts = group_counts(matrix, base);

    auto extended_actors = base.actors();
    for (auto& a : extended_actors)
        if (a.id == "tony_nwoye") a.aliases.push_back("tony");
    const auto extended = ActorSet::from_actors(extended_actors);
    const auto counts2 = group_counts(build_mentions(tweets, extended), extended);
    for (const auto& [id, n] : counts) EXPECT_GE(counts2.at(id), n) << id;
    EXPECT_GT(counts2.at("tony_nwoye"), counts.at("tony_nwoye"));

    for (const auto& a : base.actors()) {
        if (a.kind != ActorKind::kCombined) continue;
        EXPECT_LE(counts.at(a.id),
                  std::min(counts.at(a.components->first), counts.at(a.components->second)));
    }

    const auto scope = ids({"willie_obiano", "tony_nwoye", "pdp", "willie_obiano_apga"});
    for (const auto& row : matrix) {
        if (row.actors.contains("willie_obiano_apga")) {
            EXPECT_TRUE(row.actors.contains("willie_obiano"));
            EXPECT_TRUE(row.actors.contains("apga"));
        }
        auto sole = sole_mention(row.actors, base, scope);
        if (!sole) continue;
        EXPECT_TRUE(row.actors.contains(*sole));
        std::size_t in_scope = 0;
        for (const auto& id : row.actors) {
            if (!scope.contains(id)) continue;
            if (*sole == "willie_obiano_apga" && id == "willie_obiano") continue;
            ++in_scope;
        }
        EXPECT_EQ(in_scope, 1u) << row.tweet_id;
    }
}
