#include "electionpulse/topics.hpp"

#include "electionpulse/common.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

namespace electionpulse::topics {

namespace {

// 53-bit uniform in [0, 1); identical on every platform, unlike
// std::uniform_real_distribution.
double unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Corpus assemble(std::vector<std::pair<std::string, const std::vector<std::string>*>> docs,
                std::size_t min_doc_len, std::string group) {
    if (min_doc_len == 0) throw ContractViolation("min_doc_len must be at least 1");
    Corpus corpus;
    corpus.group = std::move(group);
    std::set<std::string, std::less<>> terms;
    for (const auto& [id, tokens] : docs) {
        if (tokens->size() < min_doc_len) {
            ++corpus.dropped;
            continue;
        }
        terms.insert(tokens->begin(), tokens->end());
    }
    corpus.vocabulary.assign(terms.begin(), terms.end());
    for (const auto& [id, tokens] : docs) {
        if (tokens->size() < min_doc_len) continue;
        auto& ids = corpus.docs.emplace_back();
        ids.reserve(tokens->size());
        for (const auto& t : *tokens) {
            auto it = std::lower_bound(corpus.vocabulary.begin(), corpus.vocabulary.end(), t);
            ids.push_back(static_cast<std::uint32_t>(it - corpus.vocabulary.begin()));
        }
        corpus.doc_ids.push_back(id);
    }
    if (corpus.docs.empty())
        throw ConsistencyError("corpus" + (corpus.group.empty() ? "" : " '" + corpus.group + "'") +
                               " is empty after dropping " + std::to_string(corpus.dropped) +
                               " short documents");
    return corpus;
}

}  // namespace

std::size_t Corpus::token_count() const {
    std::size_t n = 0;
    for (const auto& d : docs) n += d.size();
    return n;
}

Corpus build_corpus(std::span<const ProcessedTweet> tweets, std::size_t min_doc_len,
                    std::string group) {
    std::vector<std::pair<std::string, const std::vector<std::string>*>> docs;
    docs.reserve(tweets.size());
    for (const auto& t : tweets) docs.emplace_back(t.record_id, &t.tokens);
    return assemble(std::move(docs), min_doc_len, std::move(group));
}

Corpus build_corpus(std::span<const ProcessedTweet* const> tweets, std::size_t min_doc_len,
                    std::string group) {
    std::vector<std::pair<std::string, const std::vector<std::string>*>> docs;
    docs.reserve(tweets.size());
    for (const auto* t : tweets) docs.emplace_back(t->record_id, &t->tokens);
    return assemble(std::move(docs), min_doc_len, std::move(group));
}

Corpus build_corpus(const std::vector<std::vector<std::string>>& docs, std::size_t min_doc_len,
                    std::string group) {
    std::vector<std::pair<std::string, const std::vector<std::string>*>> refs;
    refs.reserve(docs.size());
    for (std::size_t i = 0; i < docs.size(); ++i) refs.emplace_back(std::to_string(i), &docs[i]);
    return assemble(std::move(refs), min_doc_len, std::move(group));
}

double TopicModel::phi(std::size_t topic, std::size_t word) const {
    const double vb = params.beta * static_cast<double>(v());
    return (topic_word_count(topic, word) + params.beta) /
           (static_cast<double>(topic_totals[topic]) + vb);
}

double TopicModel::theta(std::size_t doc, std::size_t topic) const {
    const double ka = params.alpha * static_cast<double>(k());
    return (doc_topic_count(doc, topic) + params.alpha) /
           (static_cast<double>(docs[doc].size()) + ka);
}

TopicModel lda_fit(const Corpus& corpus, const LdaParams& params, const SweepObserver& observer) {
    if (params.topics == 0) throw ContractViolation("topic count must be at least 1");
    if (params.iterations == 0) throw ContractViolation("iterations must be at least 1");
    if (!(params.alpha > 0.0) || !(params.beta > 0.0))
        throw ContractViolation("alpha and beta must be positive");
    if (corpus.docs.empty()) throw ContractViolation("cannot fit an empty corpus");

    TopicModel m;
    m.params = params;
    m.vocabulary = corpus.vocabulary;
    m.doc_ids = corpus.doc_ids;
    m.docs = corpus.docs;
    const std::size_t K = params.topics;
    const std::size_t V = m.v();
    const std::size_t D = m.d();
    if (V < K)
        m.warnings.push_back("vocabulary of " + std::to_string(V) + " terms is smaller than " +
                             std::to_string(K) + " topics");

    m.topic_word.assign(K * V, 0);
    m.doc_topic.assign(D * K, 0);
    m.topic_totals.assign(K, 0);
    m.assignments.resize(D);

    // Documents are visited in content order, so the random stream follows
    // each document and the fit does not depend on input order.
    std::vector<std::size_t> order(D);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return m.docs[a] < m.docs[b]; });

    std::mt19937_64 rng(params.seed);
    for (const auto d : order) {
        m.assignments[d].resize(m.docs[d].size());
        for (std::size_t i = 0; i < m.docs[d].size(); ++i) {
            const auto z = std::min(K - 1, static_cast<std::size_t>(unit(rng) * K));
            m.assignments[d][i] = static_cast<std::uint32_t>(z);
            ++m.topic_word[z * V + m.docs[d][i]];
            ++m.doc_topic[d * K + z];
            ++m.topic_totals[z];
        }
    }

    const double vb = params.beta * static_cast<double>(V);
    std::vector<double> cumulative(K);
    for (std::size_t sweep = 1; sweep <= params.iterations; ++sweep) {
        for (const auto d : order) {
            auto* dt = &m.doc_topic[d * K];
            for (std::size_t i = 0; i < m.docs[d].size(); ++i) {
                const auto w = m.docs[d][i];
                const auto old = m.assignments[d][i];
                --m.topic_word[old * V + w];
                --dt[old];
                --m.topic_totals[old];

                double total = 0.0;
                for (std::size_t k = 0; k < K; ++k) {
                    total += (dt[k] + params.alpha) * (m.topic_word[k * V + w] + params.beta) /
                             (static_cast<double>(m.topic_totals[k]) + vb);
                    cumulative[k] = total;
                }
                const double u = unit(rng) * total;
                std::size_t z = 0;
                while (z + 1 < K && cumulative[z] <= u) ++z;

                m.assignments[d][i] = static_cast<std::uint32_t>(z);
                ++m.topic_word[z * V + w];
                ++dt[z];
                ++m.topic_totals[z];
            }
        }
        if (observer) observer(sweep, m);
    }
    return m;
}

std::vector<std::string> check_invariants(const TopicModel& m) {
    std::vector<std::string> problems;
    const std::size_t K = m.k();
    const std::size_t V = m.v();
    const std::size_t D = m.d();
    if (m.topic_word.size() != K * V) problems.push_back("topic_word has wrong shape");
    if (m.doc_topic.size() != D * K) problems.push_back("doc_topic has wrong shape");
    if (m.topic_totals.size() != K) problems.push_back("topic_totals has wrong shape");
    if (m.assignments.size() != D) problems.push_back("assignments has wrong shape");
    if (!problems.empty()) return problems;

    // recount from assignments; unsigned counters that went negative show up
    // as mismatches here
    std::vector<std::uint64_t> tw(K * V, 0);
    std::vector<std::uint64_t> dt(D * K, 0);
    std::size_t tokens = 0;
    for (std::size_t d = 0; d < D; ++d) {
        if (m.assignments[d].size() != m.docs[d].size()) {
            problems.push_back("doc " + std::to_string(d) + " assignment length mismatch");
            continue;
        }
        std::uint64_t row = 0;
        for (std::size_t i = 0; i < m.docs[d].size(); ++i) {
            const auto z = m.assignments[d][i];
            const auto w = m.docs[d][i];
            if (z >= K || w >= V) {
                problems.push_back("doc " + std::to_string(d) + " has an out-of-range id");
                continue;
            }
            ++tw[z * V + w];
            ++dt[d * K + z];
            ++tokens;
        }
        for (std::size_t k = 0; k < K; ++k) row += m.doc_topic[d * K + k];
        if (row != m.docs[d].size())
            problems.push_back("doc " + std::to_string(d) + " topic counts sum to " +
                               std::to_string(row) + ", length is " +
                               std::to_string(m.docs[d].size()));
    }
    for (std::size_t i = 0; i < tw.size(); ++i)
        if (tw[i] != m.topic_word[i]) {
            problems.push_back("topic_word disagrees with assignments");
            break;
        }
    for (std::size_t i = 0; i < dt.size(); ++i)
        if (dt[i] != m.doc_topic[i]) {
            problems.push_back("doc_topic disagrees with assignments");
            break;
        }
    std::uint64_t total = 0;
    for (std::size_t k = 0; k < K; ++k) {
        std::uint64_t column = 0;
        for (std::size_t w = 0; w < V; ++w) column += m.topic_word[k * V + w];
        std::uint64_t from_docs = 0;
        for (std::size_t d = 0; d < D; ++d) from_docs += m.doc_topic[d * K + k];
        if (column != m.topic_totals[k] || column != from_docs)
            problems.push_back("topic " + std::to_string(k) + " totals are inconsistent");
        total += column;
    }
    if (total != tokens) problems.push_back("topic_word total differs from token count");
    return problems;
}

std::vector<Keyword> top_keywords(const TopicModel& model, std::size_t topic, std::size_t n) {
    if (topic >= model.k())
        throw ContractViolation("topic " + std::to_string(topic) + " out of range");
    if (n > model.v())
        throw ContractViolation("requested " + std::to_string(n) + " keywords from a vocabulary of " +
                                std::to_string(model.v()));
    std::vector<std::size_t> order(model.v());
    std::iota(order.begin(), order.end(), std::size_t{0});
    // vocabulary is sorted, so index order is the lexicographic tie-break
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return model.topic_word_count(topic, a) > model.topic_word_count(topic, b);
    });
    std::vector<Keyword> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        out.emplace_back(model.vocabulary[order[i]], model.phi(topic, order[i]));
    return out;
}

std::vector<double> doc_topics(const TopicModel& model, std::size_t doc) {
    if (doc >= model.d()) throw ContractViolation("document " + std::to_string(doc) + " out of range");
    std::vector<double> out(model.k());
    for (std::size_t k = 0; k < model.k(); ++k) out[k] = model.theta(doc, k);
    return out;
}

TopicReport topic_report(const TopicModel& model, std::size_t n,
                         const std::map<std::size_t, std::string>& labels, std::string group) {
    for (const auto& [id, label] : labels)
        if (id >= model.k())
            throw ConfigError("label '" + label + "' refers to topic " + std::to_string(id) +
                              " but the model has " + std::to_string(model.k()) + " topics");
    TopicReport report;
    report.group = std::move(group);
    const std::size_t take = std::min(n, model.v());
    for (std::size_t k = 0; k < model.k(); ++k) {
        TopicRow row;
        row.id = k;
        if (auto it = labels.find(k); it != labels.end()) row.label = it->second;
        row.keywords = top_keywords(model, k, take);
        report.topics.push_back(std::move(row));
    }
    return report;
}

}  // namespace electionpulse::topics
