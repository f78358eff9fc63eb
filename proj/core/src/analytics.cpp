#include "electionpulse/analytics.hpp"

#include "electionpulse/common.hpp"
#include "electionpulse/porter.hpp"

#include <algorithm>
#include <map>

namespace electionpulse::analytics {

namespace {

void check_aligned(std::size_t tweets, std::size_t scores, std::string_view what) {
    if (tweets != scores)
        throw ConsistencyError(std::string(what) + " has " + std::to_string(scores) +
                               " values for " + std::to_string(tweets) + " tweets");
}

}  // namespace

std::optional<TimeBucket> bucket_of(const LocalTime& time) {
    auto idx = bucket_index(time.seconds_of_day());
    if (!idx) return std::nullopt;
    return kTimeBuckets[*idx];
}

std::vector<SentimentSeries> avg_sentiment_series(std::span<const ProcessedTweet> tweets,
                                                  std::span<const double> polarity,
                                                  std::span<const double> subjectivity,
                                                  const actors::ActorSet& actors,
                                                  std::span<const std::string> scope,
                                                  double polarity_scale) {
    check_aligned(tweets.size(), polarity.size(), "polarity list");
    check_aligned(tweets.size(), subjectivity.size(), "subjectivity list");

    const actors::IdSet scope_set(scope.begin(), scope.end());
    struct Sum {
        std::size_t n = 0;
        double polarity = 0.0;
        double subjectivity = 0.0;
    };
    std::map<std::string, std::array<Sum, kBucketCount>, std::less<>> sums;
    for (std::size_t i = 0; i < tweets.size(); ++i) {
        const auto& t = tweets[i];
        if (!t.bucket) continue;
        auto who = actors::sole_mention(actors::match_actors(t, actors), actors, scope_set);
        if (!who) continue;
        auto& cell = sums[*who][*t.bucket];
        ++cell.n;
        cell.polarity += polarity[i];
        cell.subjectivity += subjectivity[i];
    }

    std::vector<SentimentSeries> out;
    for (const auto& id : scope) {
        SentimentSeries series{id, {}};
        if (auto it = sums.find(id); it != sums.end()) {
            for (std::size_t b = 0; b < kBucketCount; ++b) {
                const auto& s = it->second[b];
                auto& cell = series.cells[b];
                cell.count = s.n;
                if (s.n == 0) continue;
                const double n = static_cast<double>(s.n);
                cell.mean_polarity_scaled = s.polarity / n * polarity_scale;
                cell.mean_subjectivity = s.subjectivity / n;
            }
        }
        out.push_back(std::move(series));
    }
    return out;
}

FrequencyTable term_frequencies(const TweetGroup& tweets, const preprocess::StopwordSet& exclusions,
                                std::size_t top_n) {
    if (top_n == 0) throw ContractViolation("top_n must be at least 1");
    std::map<std::string, std::size_t, std::less<>> counts;
    for (const auto* t : tweets)
        for (const auto& tok : t->tokens)
            if (!exclusions.contains(tok)) ++counts[tok];
    FrequencyTable table;
    table.terms.assign(counts.begin(), counts.end());
    // map order already sorts terms ascending; stable sort keeps it for ties
    std::stable_sort(table.terms.begin(), table.terms.end(),
                     [](const TermCount& a, const TermCount& b) { return a.second > b.second; });
    if (table.terms.size() > top_n) table.terms.resize(top_n);
    return table;
}

FrequencyTable term_frequencies(std::span<const ProcessedTweet> tweets,
                                const preprocess::StopwordSet& exclusions, std::size_t top_n) {
    TweetGroup group;
    group.reserve(tweets.size());
    for (const auto& t : tweets) group.push_back(&t);
    return term_frequencies(group, exclusions, top_n);
}

preprocess::StopwordSet with_actor_exclusions(const preprocess::StopwordSet& base,
                                              const actors::ActorSet& actors) {
    preprocess::StopwordSet out = base;
    for (const auto& w : actors.alias_words()) {
        out.add_extra(w);
        out.add_extra(preprocess::stem_fixed(w));
    }
    out.set_use_extra(true);
    return out;
}

FrequencyTable cooccurrence_cloud(std::span<const ProcessedTweet> tweets,
                                  const actors::ActorSet& actors, std::string_view actor_id,
                                  const preprocess::StopwordSet& exclusions, std::size_t top_n) {
    TweetGroup group;
    for (const auto& t : tweets)
        if (actors::match_actors(t, actors).contains(actor_id)) group.push_back(&t);
    auto table = term_frequencies(group, with_actor_exclusions(exclusions, actors), top_n);
    table.group = std::string(actor_id);
    return table;
}

Heatmap frequency_heatmap(std::span<const ProcessedTweet> tweets, const actors::ActorSet& actors,
                          std::span<const std::string> scope,
                          const preprocess::StopwordSet& exclusions, std::size_t top_n) {
    const actors::IdSet scope_set(scope.begin(), scope.end());
    std::map<std::string, std::array<TweetGroup, kBucketCount>, std::less<>> groups;
    for (const auto& t : tweets) {
        if (!t.bucket) continue;
        auto who = actors::sole_mention(actors::match_actors(t, actors), actors, scope_set);
        if (who) groups[*who][*t.bucket].push_back(&t);
    }
    Heatmap map;
    for (const auto& id : scope) {
        map.actors.push_back(id);
        auto& row = map.cells.emplace_back();
        auto it = groups.find(id);
        if (it == groups.end()) continue;
        for (std::size_t b = 0; b < kBucketCount; ++b) {
            if (it->second[b].empty()) continue;
            auto table = term_frequencies(it->second[b], exclusions, top_n);
            table.group = id + "@" + std::string(kTimeBuckets[b].label);
            row[b] = std::move(table);
        }
    }
    return map;
}

std::vector<std::pair<std::string, std::optional<double>>> combined_avg_polarity(
    std::span<const ProcessedTweet> tweets, std::span<const double> polarity,
    const actors::ActorSet& actors) {
    check_aligned(tweets.size(), polarity.size(), "polarity list");
    std::map<std::string, std::pair<double, std::size_t>, std::less<>> sums;
    for (std::size_t i = 0; i < tweets.size(); ++i) {
        for (const auto& id : actors::match_actors(tweets[i], actors)) {
            auto& s = sums[id];
            s.first += polarity[i];
            ++s.second;
        }
    }
    std::vector<std::pair<std::string, std::optional<double>>> out;
    for (const auto& a : actors.actors()) {
        if (a.kind != actors::ActorKind::kCombined) continue;
        auto it = sums.find(a.id);
        if (it == sums.end() || it->second.second == 0) {
            out.emplace_back(a.id, std::nullopt);
        } else {
            out.emplace_back(a.id, it->second.first / static_cast<double>(it->second.second));
        }
    }
    return out;
}

std::vector<ActorSentimentSummary> actor_sentiment_summary(
    std::span<const ProcessedTweet> tweets, std::span<const double> polarity,
    std::span<const double> subjectivity, const actors::ActorSet& actors,
    double subjectivity_threshold) {
    check_aligned(tweets.size(), polarity.size(), "polarity list");
    check_aligned(tweets.size(), subjectivity.size(), "subjectivity list");

    struct Acc {
        std::vector<sentiment::PolarityClass> classes;
        std::size_t subjective = 0;
        double polarity = 0.0;
        double subjectivity = 0.0;
    };
    std::map<std::string, Acc, std::less<>> acc;
    for (std::size_t i = 0; i < tweets.size(); ++i) {
        for (const auto& id : actors::match_actors(tweets[i], actors)) {
            auto& a = acc[id];
            a.classes.push_back(sentiment::polarity_class(polarity[i]));
            if (sentiment::subjectivity_class(subjectivity[i], subjectivity_threshold) ==
                sentiment::SubjectivityClass::kSubjective)
                ++a.subjective;
            a.polarity += polarity[i];
            a.subjectivity += subjectivity[i];
        }
    }
    std::vector<ActorSentimentSummary> out;
    for (const auto& actor : actors.actors()) {
        ActorSentimentSummary s;
        s.actor = actor.id;
        s.kind = actor.kind;
        if (auto it = acc.find(actor.id); it != acc.end()) {
            const auto& a = it->second;
            s.tweets = a.classes.size();
            s.polarity = sentiment::distribution(a.classes);
            s.subjective = a.subjective;
            s.objective = s.tweets - a.subjective;
            const double n = static_cast<double>(s.tweets);
            s.mean_polarity = a.polarity / n;
            s.mean_subjectivity = a.subjectivity / n;
        }
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace electionpulse::analytics
