#pragma once

#include "electionpulse/tweet.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace electionpulse::topics {

struct Corpus {
    std::string group;
    std::vector<std::string> vocabulary;  // sorted, index = term id
    std::vector<std::vector<std::uint32_t>> docs;
    std::vector<std::string> doc_ids;
    std::size_t dropped = 0;  // docs shorter than min_doc_len

    [[nodiscard]] std::size_t token_count() const;
};

/// Builds a corpus from final tokens. min_doc_len == 0 is a
/// ContractViolation; a corpus with no surviving document throws
/// ConsistencyError.
Corpus build_corpus(std::span<const ProcessedTweet> tweets, std::size_t min_doc_len,
                    std::string group = {});
Corpus build_corpus(std::span<const ProcessedTweet* const> tweets, std::size_t min_doc_len,
                    std::string group = {});
Corpus build_corpus(const std::vector<std::vector<std::string>>& docs, std::size_t min_doc_len,
                    std::string group = {});

struct LdaParams {
    std::size_t topics = 5;
    double alpha = 0.1;
    double beta = 0.01;
    std::size_t iterations = 500;
    std::uint64_t seed = 42;
};

struct TopicModel {
    LdaParams params;
    std::vector<std::string> vocabulary;
    std::vector<std::string> doc_ids;
    std::vector<std::vector<std::uint32_t>> docs;
    std::vector<std::vector<std::uint32_t>> assignments;  // parallel to docs
    std::vector<std::uint32_t> topic_word;  // K x V, row major
    std::vector<std::uint32_t> doc_topic;   // D x K, row major
    std::vector<std::uint64_t> topic_totals;
    std::vector<std::string> warnings;

    [[nodiscard]] std::size_t k() const { return params.topics; }
    [[nodiscard]] std::size_t v() const { return vocabulary.size(); }
    [[nodiscard]] std::size_t d() const { return docs.size(); }

    [[nodiscard]] std::uint32_t topic_word_count(std::size_t topic, std::size_t word) const {
        return topic_word[topic * v() + word];
    }
    [[nodiscard]] std::uint32_t doc_topic_count(std::size_t doc, std::size_t topic) const {
        return doc_topic[doc * k() + topic];
    }

    /// (count + beta) / (topic total + beta V)
    [[nodiscard]] double phi(std::size_t topic, std::size_t word) const;
    /// (doc count + alpha) / (doc length + alpha K)
    [[nodiscard]] double theta(std::size_t doc, std::size_t topic) const;
};

/// Called after every sweep with the 1-based sweep number.
using SweepObserver = std::function<void(std::size_t sweep, const TopicModel& model)>;

/// Collapsed Gibbs sampling. Throws ContractViolation for topics == 0,
/// iterations == 0 or non-positive hyperparameters. A vocabulary smaller
/// than the topic count only adds a warning. Documents are swept in content
/// order, so reordering the corpus only reorders the per-document rows.
TopicModel lda_fit(const Corpus& corpus, const LdaParams& params,
                   const SweepObserver& observer = {});

/// Every count invariant the model should satisfy; empty when consistent.
std::vector<std::string> check_invariants(const TopicModel& model);

using Keyword = std::pair<std::string, double>;

/// n terms with the largest phi, descending, ties by term. Throws
/// ContractViolation for topic >= K or n > V.
std::vector<Keyword> top_keywords(const TopicModel& model, std::size_t topic, std::size_t n);

/// theta row for one document. Throws ContractViolation for doc >= D.
std::vector<double> doc_topics(const TopicModel& model, std::size_t doc);

struct TopicRow {
    std::size_t id = 0;
    std::string label;
    std::vector<Keyword> keywords;
};

struct TopicReport {
    std::string group;
    std::vector<TopicRow> topics;
};

/// top_keywords for every topic (n is clamped to V) with labels attached.
/// A label for a nonexistent topic throws ConfigError.
TopicReport topic_report(const TopicModel& model, std::size_t n,
                         const std::map<std::size_t, std::string>& labels = {},
                         std::string group = {});

}  // namespace electionpulse::topics
