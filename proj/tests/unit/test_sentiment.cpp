#include "electionpulse/common.hpp"
#include "electionpulse/sentiment.hpp"

#include "synth.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <sstream>

using namespace electionpulse;
using namespace electionpulse::sentiment;

namespace {

SenseLexicon sense_from(const std::string& text) {
    std::istringstream in(text);
    return SenseLexicon::parse(in);
}

const SenseLexicon& good_bad() {
    static const SenseLexicon lex = sense_from(
        "# POS\tID\tPosScore\tNegScore\tSynsetTerms\tGloss\n"
        "a\t1\t0.75\t0\tgood#1\tgloss\n"
        "a\t2\t0\t0.75\tbad#1\tgloss\n");
    return lex;
}

PatternLexicon pattern_from(std::vector<PatternEntry> rows) {
    return PatternLexicon::from_entries(rows);
}

const std::set<std::string, std::less<>> kNegators{"not", "never", "no"};

std::vector<std::string> words(std::initializer_list<const char*> w) {
    return {w.begin(), w.end()};
}

}  // namespace

TEST(SentimentScore, RangeChecked) {
    EXPECT_NO_THROW(SentimentScore(-1.0, 0.0));
    EXPECT_NO_THROW(SentimentScore(1.0, 1.0));
    EXPECT_THROW(SentimentScore(1.01, 0.5), ContractViolation);
    EXPECT_THROW(SentimentScore(0.0, -0.1), ContractViolation);
    EXPECT_THROW(SentimentScore(0.0, 1.5), ContractViolation);
}

TEST(SenseLexicon, EstimableRows) {
    const auto lex = sense_from(
        "a\t00001740\t0.75\t0\testimable#1\tdeserving of respect\n"
        "a\t00002312\t0\t0\testimable#3 computable#1\tmay be computed\n"
        "a\t00002313\t0.9\t0.3\toverfull#1\tsum above one\n");
    EXPECT_EQ(lex.report().rows_read, 3u);
    EXPECT_EQ(lex.report().rows_accepted, 2u);
    EXPECT_EQ(lex.report().rows_rejected, 1u);
    ASSERT_EQ(lex.entries().size(), 3u);
    const auto& e1 = lex.entries()[0];
    EXPECT_EQ(e1.lemma, "estimable");
    EXPECT_EQ(e1.sense_rank, 1);
    EXPECT_DOUBLE_EQ(e1.pos_score, 0.75);
    EXPECT_DOUBLE_EQ(e1.neg_score, 0.0);
    EXPECT_DOUBLE_EQ(e1.obj_score, 0.25);
    const auto& e3 = lex.entries()[1];
    EXPECT_EQ(e3.sense_rank, 3);
    EXPECT_DOUBLE_EQ(e3.obj_score, 1.0);
    EXPECT_EQ(lex.entries()[2].lemma, "computable");
    EXPECT_FALSE(lex.word_sentiment("overfull"));
}

TEST(SenseLexicon, MalformedRowsCounted) {
    const auto lex = sense_from(
        "a\t1\tx\t0\tfoo#1\tg\n"
        "a\t1\t0.2\t0.1\n"
        "q\t1\t0.2\t0.1\tfoo#1\tg\n"
        "a\t1\t0.2\t0.1\tfoo\tg\n"
        "a\t1\t-0.1\t0.1\tfoo#1\tg\n"
        "s\t1\t0.25\t0.25\tfine#2\tg\n");
    EXPECT_EQ(lex.report().rows_rejected, 5u);
    EXPECT_EQ(lex.report().rows_accepted, 1u);
    ASSERT_EQ(lex.entries().size(), 1u);
    EXPECT_EQ(lex.entries()[0].pos_tag, 'a');
}

TEST(SenseLexicon, SyntheticLexiconSumInvariant) {
    const auto lex = sense_from(ep_test::sense_lexicon_text(2000, 40, 7));
    EXPECT_EQ(lex.report().rows_read, 2000u);
    EXPECT_EQ(lex.report().rows_rejected, 40u);
    for (const auto& e : lex.entries()) {
        EXPECT_EQ(e.lemma.rfind("badrow", 0), std::string::npos);
        EXPECT_NEAR(e.pos_score + e.neg_score + e.obj_score, 1.0, 1e-6);
        EXPECT_GE(e.obj_score, 0.0);
    }
}

TEST(SenseLexicon, MissingFileIsIoError) {
    EXPECT_THROW(SenseLexicon::load("/nonexistent/swn.txt"), IoError);
}

TEST(WordSentiment, RankWeighting) {
    const auto single = sense_from("a\t1\t0.75\t0\tlone#1\tg\n");
    auto ws = single.word_sentiment("lone");
    ASSERT_TRUE(ws);
    EXPECT_DOUBLE_EQ(ws->pos, 0.75);
    EXPECT_DOUBLE_EQ(ws->neg, 0.0);

    const auto two = sense_from("a\t1\t0.5\t0\tmixed#1\tg\nn\t2\t0\t0.5\tmixed#2\tg\n");
    ws = two.word_sentiment("mixed");
    ASSERT_TRUE(ws);
    EXPECT_NEAR(ws->pos, 0.5 / 1.5, 1e-12);
    EXPECT_NEAR(ws->neg, 0.25 / 1.5, 1e-12);
    EXPECT_NEAR(ws->pos, 0.3333, 1e-4);
    EXPECT_NEAR(ws->neg, 0.1667, 1e-4);

    EXPECT_FALSE(two.word_sentiment("unknown"));
}

TEST(SwnPolarity, MeanOverMatches) {
    EXPECT_DOUBLE_EQ(swn_polarity(good_bad(), words({"good"})), 0.75);
    EXPECT_DOUBLE_EQ(swn_polarity(good_bad(), words({"good", "bad"})), 0.0);
    EXPECT_DOUBLE_EQ(swn_polarity(good_bad(), words({"meh", "zz"})), 0.0);
    EXPECT_DOUBLE_EQ(swn_polarity(good_bad(), words({"good", "meh"})), 0.75);
    const auto s = swn_score(good_bad(), words({"good", "bad", "meh"}));
    EXPECT_DOUBLE_EQ(s.subjectivity(), 0.75);
}

TEST(SwnPolarity, NoMatchIsNeutral) {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 100; ++i) {
        std::vector<std::string> toks;
        for (int k = 0; k < 5; ++k) toks.push_back("w" + std::to_string(rng() % 1000));
        EXPECT_EQ(polarity_class(swn_polarity(good_bad(), toks)), PolarityClass::kNeutral);
    }
}

TEST(PatternScore, Examples) {
    const auto lex = pattern_from({{"great", 0.8, 0.75}});
    auto s = pattern_score(words({"great"}), lex, kNegators);
    EXPECT_DOUBLE_EQ(s.polarity(), 0.8);
    EXPECT_DOUBLE_EQ(s.subjectivity(), 0.75);
    s = pattern_score(words({"not", "great"}), lex, kNegators);
    EXPECT_DOUBLE_EQ(s.polarity(), -0.4);
    EXPECT_DOUBLE_EQ(s.subjectivity(), 0.75);
    s = pattern_score({}, lex, kNegators);
    EXPECT_DOUBLE_EQ(s.polarity(), 0.0);
    EXPECT_DOUBLE_EQ(s.subjectivity(), 0.0);
}

TEST(PatternScore, NegationWindowIsTwoTokens) {
    const auto lex = pattern_from({{"great", 0.8, 0.75}});
    EXPECT_DOUBLE_EQ(pattern_score(words({"not", "so", "great"}), lex, kNegators).polarity(), -0.4);
    EXPECT_DOUBLE_EQ(pattern_score(words({"not", "so", "very", "great"}), lex, kNegators).polarity(),
                     0.8);
}

TEST(PatternScore, DuplicateRowsAveraged) {
    std::istringstream in("lemma,polarity,subjectivity\nfine,0.4,0.5\nfine,0.2,0.7\nbad,2,0\n");
    const auto lex = PatternLexicon::parse(in);
    EXPECT_EQ(lex.size(), 1u);
    EXPECT_EQ(lex.report().rows_rejected, 1u);
    ASSERT_NE(lex.find("fine"), nullptr);
    EXPECT_NEAR(lex.find("fine")->polarity, 0.3, 1e-12);
    EXPECT_NEAR(lex.find("fine")->subjectivity, 0.6, 1e-12);
}

TEST(PatternScore, NegationPropertyAndOrderInvariance) {
    const auto lex = PatternLexicon::load(EP_FIXTURE_DIR "/pattern_lexicon.csv");
    const auto negators = load_word_list(EP_FIXTURE_DIR "/negators.txt");
    std::mt19937_64 rng(11);
    std::vector<std::string> vocab;
    for (const char* w : {"good", "bad", "great", "terrible", "happy", "sad", "peaceful", "violent",
                          "free", "fair", "corrupt", "excellent"})
        if (lex.find(w) && lex.find(w)->polarity != 0.0) vocab.push_back(w);
    ASSERT_GE(vocab.size(), 6u);
    for (const auto& w : vocab) {
        const double p = pattern_score(std::vector<std::string>{w}, lex, negators).polarity();
        const double n = pattern_score(std::vector<std::string>{"not", w}, lex, negators).polarity();
        EXPECT_LT(p * n, 0.0) << w;
        EXPECT_NEAR(std::abs(n), std::abs(p) / 2.0, 1e-12) << w;
    }
    const std::set<std::string, std::less<>> none;
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<std::string> toks;
        for (int k = 0; k < 6; ++k) toks.push_back(vocab[rng() % vocab.size()]);
        const auto a = pattern_score(toks, lex, none);
        std::shuffle(toks.begin(), toks.end(), rng);
        const auto b = pattern_score(toks, lex, none);
        EXPECT_NEAR(a.polarity(), b.polarity(), 1e-12);
        EXPECT_NEAR(a.subjectivity(), b.subjectivity(), 1e-12);
    }
}

TEST(ScoreAll, ThreeTweetFixture) {
    Lexicons lex;
    lex.pattern = pattern_from({{"great", 0.8, 0.75}, {"bad", -0.7, 0.6}, {"calm", 0.3, 0.5}});
    lex.sense = good_bad();
    lex.negators = kNegators;
    std::vector<ProcessedTweet> tweets{
        ep_test::make_tweet("1", 9, 0, words({"great", "calm", "day"})),
        ep_test::make_tweet("2", 10, 0, words({"not", "bad"})),
        ep_test::make_tweet("3", 11, 0, words({"nothing", "here"})),
    };
    const auto pat = score_all(tweets, lex, Engine::kPattern);
    ASSERT_EQ(pat.polarity.size(), 3u);
    EXPECT_NEAR(pat.polarity[0], (0.8 + 0.3) / 2, 1e-12);
    EXPECT_NEAR(pat.subjectivity[0], (0.75 + 0.5) / 2, 1e-12);
    EXPECT_NEAR(pat.polarity[1], 0.35, 1e-12);
    EXPECT_NEAR(pat.subjectivity[1], 0.6, 1e-12);
    EXPECT_EQ(pat.polarity[2], 0.0);
    EXPECT_EQ(pat.subjectivity[2], 0.0);

    const auto swn = score_all(tweets, lex, Engine::kSwn);
    EXPECT_EQ(swn.polarity.size(), 3u);
    EXPECT_EQ(swn.subjectivity.size(), 3u);
    EXPECT_NEAR(swn.polarity[1], -0.75, 1e-12);

    const auto empty = score_all(std::span<const ProcessedTweet>{}, lex, Engine::kPattern);
    EXPECT_TRUE(empty.polarity.empty());
    EXPECT_TRUE(empty.subjectivity.empty());
}

TEST(Classes, Boundaries) {
    EXPECT_EQ(polarity_class(0.3), PolarityClass::kPositive);
    EXPECT_EQ(polarity_class(0.0), PolarityClass::kNeutral);
    EXPECT_EQ(polarity_class(-0.0), PolarityClass::kNeutral);
    EXPECT_EQ(polarity_class(-0.0001), PolarityClass::kNegative);
    EXPECT_EQ(polarity_class(1e-9), PolarityClass::kPositive);
    EXPECT_EQ(polarity_class(-1e-9), PolarityClass::kNegative);
    EXPECT_THROW(polarity_class(1.5), ContractViolation);
    EXPECT_THROW(polarity_class(std::nan("")), ContractViolation);

    EXPECT_EQ(subjectivity_class(0.9), SubjectivityClass::kSubjective);
    EXPECT_EQ(subjectivity_class(0.5), SubjectivityClass::kObjective);
    EXPECT_EQ(subjectivity_class(0.0), SubjectivityClass::kObjective);
    EXPECT_THROW(subjectivity_class(-0.01), ContractViolation);
}

TEST(Distribution, PublishedRows) {
    auto d = distribution_from_counts(2447, 3971, 1012);
    EXPECT_EQ(d.total, 7430u);
    EXPECT_EQ(format_percentage(d.basis_points[0]), "32.93");
    EXPECT_EQ(format_percentage(d.basis_points[2]), "13.62");
    EXPECT_TRUE(format_percentage(d.basis_points[1]) == "53.44" ||
                format_percentage(d.basis_points[1]) == "53.45");

    d = distribution_from_counts(2916, 3085, 1429);
    EXPECT_EQ(format_percentage(d.basis_points[0]), "39.25");
    EXPECT_EQ(format_percentage(d.basis_points[1]), "41.52");
    EXPECT_EQ(format_percentage(d.basis_points[2]), "19.23");
}

TEST(Distribution, EmptyAndLabels) {
    const auto d = distribution(std::span<const PolarityClass>{});
    EXPECT_EQ(d.total, 0u);
    EXPECT_EQ(d.basis_points, (std::array<long long, 3>{0, 0, 0}));
    const std::vector<PolarityClass> labels{PolarityClass::kPositive, PolarityClass::kNegative,
                                            PolarityClass::kPositive};
    const auto e = distribution(labels);
    EXPECT_EQ(e.count(PolarityClass::kPositive), 2u);
    EXPECT_EQ(e.count(PolarityClass::kNeutral), 0u);
    EXPECT_EQ(format_percentage(e.basis_points[0]), "66.67");
    EXPECT_EQ(format_percentage(e.basis_points[2]), "33.33");
    EXPECT_EQ(format_percentage(5), "0.05");
}

TEST(Distribution, PercentagesSumToHundred) {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 2000; ++i) {
        const auto d = distribution_from_counts(rng() % 5000, rng() % 5000, rng() % 5000 + 1);
        double sum = 0;
        std::size_t count_sum = 0;
        for (std::size_t c = 0; c < 3; ++c) {
            sum += static_cast<double>(d.basis_points[c]) / 100.0;
            count_sum += d.counts[c];
        }
        EXPECT_NEAR(sum, 100.0, 0.03 + 1e-9);
        EXPECT_EQ(count_sum, d.total);
    }
}

TEST(CompareClassifiers, PerTweetOracle) {
    Lexicons lex;
    lex.pattern = pattern_from({{"good", 0.7, 0.6}, {"bad", -0.7, 0.6}, {"fine", 0.2, 0.4}});
    lex.sense = good_bad();
    lex.negators = kNegators;
    const std::vector<std::vector<std::string>> texts{
        {"good"}, {"bad"}, {"fine"}, {"not", "good"}, {"meh"},
        {"good", "bad"}, {"fine", "bad"}, {"not", "bad"}, {"good", "fine"}, {"other"}};
    std::vector<ProcessedTweet> tweets;
    for (std::size_t i = 0; i < texts.size(); ++i)
        tweets.push_back(ep_test::make_tweet(std::to_string(i), 12, 0, texts[i]));
    // pattern: +, -, +, -, 0, 0, (0.2-0.7)/2 -, +0.35 +, + , 0
    // swn:     +, -, 0, +, 0, 0, -, -, +, 0
    const auto rows = compare_classifiers(tweets, lex);
    ASSERT_EQ(rows.size(), 2u);
    EXPECT_EQ(rows[0].engine, "pattern");
    EXPECT_EQ(rows[0].distribution.counts, (std::array<std::size_t, 3>{4, 3, 3}));
    EXPECT_EQ(rows[1].engine, "swn");
    EXPECT_EQ(rows[1].distribution.counts, (std::array<std::size_t, 3>{3, 4, 3}));

    const auto empty = compare_classifiers(std::span<const ProcessedTweet>{}, lex);
    ASSERT_EQ(empty.size(), 2u);
    EXPECT_EQ(empty[0].distribution.total, 0u);
    EXPECT_EQ(empty[1].distribution.total, 0u);
}

TEST(CompareClassifiers, AllPositiveFixture) {
    Lexicons lex;
    lex.pattern = pattern_from({{"good", 0.7, 0.6}});
    lex.sense = good_bad();
    std::vector<ProcessedTweet> tweets;
    for (int i = 0; i < 5; ++i)
        tweets.push_back(ep_test::make_tweet(std::to_string(i), 8, i, words({"good", "day"})));
    for (const auto& row : compare_classifiers(tweets, lex))
        EXPECT_EQ(format_percentage(row.distribution.basis_points[0]), "100.00");
}

TEST(Engine, ParseNames) {
    EXPECT_EQ(parse_engine("pattern"), Engine::kPattern);
    EXPECT_EQ(parse_engine("swn"), Engine::kSwn);
    EXPECT_THROW(parse_engine("vader"), ConfigError);
}
