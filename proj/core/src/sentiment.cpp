#include "electionpulse/sentiment.hpp"

#include "electionpulse/common.hpp"

#include <cmath>
#include <string>

namespace electionpulse::sentiment {

SentimentScore::SentimentScore(double polarity, double subjectivity)
    : polarity_(polarity), subjectivity_(subjectivity) {
    if (!(polarity >= -1.0 && polarity <= 1.0))
        throw ContractViolation("polarity out of [-1, 1]: " + std::to_string(polarity));
    if (!(subjectivity >= 0.0 && subjectivity <= 1.0))
        throw ContractViolation("subjectivity out of [0, 1]: " + std::to_string(subjectivity));
}

std::string_view to_string(Engine engine) {
    return engine == Engine::kPattern ? "pattern" : "swn";
}

Engine parse_engine(std::string_view name) {
    if (name == "pattern") return Engine::kPattern;
    if (name == "swn") return Engine::kSwn;
    throw ConfigError("unknown sentiment engine '" + std::string(name) + "' (expected pattern or swn)");
}

SentimentScore score_tweet(const ProcessedTweet& tweet, const Lexicons& lexicons, Engine engine) {
    if (engine == Engine::kPattern) return pattern_score(tweet.words, lexicons.pattern, lexicons.negators);
    return swn_score(lexicons.sense, tweet.words);
}

ScoreLists score_all(std::span<const ProcessedTweet> tweets, const Lexicons& lexicons,
                     Engine engine) {
    ScoreLists out;
    out.polarity.reserve(tweets.size());
    out.subjectivity.reserve(tweets.size());
    for (const auto& t : tweets) {
        const auto s = score_tweet(t, lexicons, engine);
        out.polarity.push_back(s.polarity());
        out.subjectivity.push_back(s.subjectivity());
    }
    return out;
}

std::string_view to_string(PolarityClass c) {
    switch (c) {
    case PolarityClass::kPositive: return "positive";
    case PolarityClass::kNeutral: return "neutral";
    case PolarityClass::kNegative: return "negative";
    }
    return "neutral";
}

std::string_view to_string(SubjectivityClass c) {
    return c == SubjectivityClass::kSubjective ? "subjective" : "objective";
}

PolarityClass polarity_class(double score) {
    if (!(score >= -1.0 && score <= 1.0))
        throw ContractViolation("polarity out of [-1, 1]: " + std::to_string(score));
    if (score > 0.0) return PolarityClass::kPositive;
    if (score < 0.0) return PolarityClass::kNegative;
    return PolarityClass::kNeutral;
}

SubjectivityClass subjectivity_class(double score, double threshold) {
    if (!(score >= 0.0 && score <= 1.0))
        throw ContractViolation("subjectivity out of [0, 1]: " + std::to_string(score));
    return score > threshold ? SubjectivityClass::kSubjective : SubjectivityClass::kObjective;
}

double PolarityDistribution::percentage(PolarityClass c) const {
    return static_cast<double>(basis_points[static_cast<std::size_t>(c)]) / 100.0;
}

std::size_t PolarityDistribution::count(PolarityClass c) const {
    return counts[static_cast<std::size_t>(c)];
}

PolarityDistribution distribution_from_counts(std::size_t positive, std::size_t neutral,
                                              std::size_t negative) {
    PolarityDistribution d;
    d.counts = {positive, neutral, negative};
    d.total = positive + neutral + negative;
    if (d.total == 0) return d;
    const auto total = static_cast<long long>(d.total);
    for (std::size_t i = 0; i < 3; ++i) {
        // round(count * 10000 / total), halves rounded up, in exact integers
        const auto c = static_cast<long long>(d.counts[i]);
        d.basis_points[i] = (2 * c * 10000 + total) / (2 * total);
    }
    return d;
}

PolarityDistribution distribution(std::span<const PolarityClass> labels) {
    std::array<std::size_t, 3> counts{};
    for (auto l : labels) ++counts[static_cast<std::size_t>(l)];
    return distribution_from_counts(counts[0], counts[1], counts[2]);
}

std::string format_percentage(long long basis_points) {
    const bool negative = basis_points < 0;
    const auto abs = negative ? -basis_points : basis_points;
    std::string frac = std::to_string(abs % 100);
    if (frac.size() < 2) frac.insert(frac.begin(), '0');
    return (negative ? "-" : "") + std::to_string(abs / 100) + "." + frac;
}

std::vector<ClassifierRow> compare_classifiers(std::span<const ProcessedTweet> tweets,
                                               const Lexicons& lexicons, const NbcModel* nbc) {
    std::vector<ClassifierRow> rows;
    for (auto engine : {Engine::kPattern, Engine::kSwn}) {
        std::vector<PolarityClass> labels;
        labels.reserve(tweets.size());
        for (const auto& t : tweets)
            labels.push_back(polarity_class(score_tweet(t, lexicons, engine).polarity()));
        rows.push_back({std::string(to_string(engine)), distribution(labels)});
    }
    if (nbc) {
        bool mappable = !nbc->priors.empty();
        for (const auto& [label, p] : nbc->priors) mappable = mappable && label_to_class(label);
        if (mappable) {
            std::vector<PolarityClass> labels;
            labels.reserve(tweets.size());
            for (const auto& t : tweets) labels.push_back(*label_to_class(nbc_classify(*nbc, t.words).label));
            rows.push_back({"nbc", distribution(labels)});
        }
    }
    return rows;
}

}  // namespace electionpulse::sentiment
