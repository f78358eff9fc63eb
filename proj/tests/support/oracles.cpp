#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace ep_test {

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::pair<std::string, std::string>> read_tsv_pairs(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::vector<std::pair<std::string, std::string>> out;
    std::string line;
    while (std::getline(in, line)) {
        auto tab = line.find('\t');
        if (tab == std::string::npos) continue;
        out.emplace_back(line.substr(0, tab), line.substr(tab + 1));
    }
    return out;
}

std::size_t osa_oracle(const std::string& a, const std::string& b) {
    const std::size_t n = a.size();
    const std::size_t m = b.size();
    std::vector<std::vector<std::size_t>> d(n + 1, std::vector<std::size_t>(m + 1));
    for (std::size_t i = 0; i <= n; ++i) d[i][0] = i;
    for (std::size_t j = 0; j <= m; ++j) d[0][j] = j;
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 1; j <= m; ++j) {
            const std::size_t cost = a[i - 1] == b[j - 1] ? 0 : 1;
            d[i][j] = std::min({d[i - 1][j] + 1, d[i][j - 1] + 1, d[i - 1][j - 1] + cost});
            if (i > 1 && j > 1 && a[i - 1] == b[j - 2] && a[i - 2] == b[j - 1])
                d[i][j] = std::min(d[i][j], d[i - 2][j - 2] + 1);
        }
    }
    return d[n][m];
}

std::string brute_force_correct(const std::map<std::string, std::uint64_t>& dict,
                                const std::string& word) {
    if (word.empty() || dict.contains(word)) return word;
    const std::string* best = nullptr;
    std::uint64_t best_count = 0;
    // map iterates in lexicographic order, so strict > keeps the smallest on ties
    for (const auto& [w, c] : dict) {
        if (w.size() + 2 < word.size() || word.size() + 2 < w.size()) continue;
        if (osa_oracle(word, w) > 2) continue;
        if (!best || c > best_count) {
            best = &w;
            best_count = c;
        }
    }
    return best ? *best : word;
}

std::set<std::string> edits1(const std::string& word) {
    static const std::string letters = "abcdefghijklmnopqrstuvwxyz";
    std::set<std::string> out;
    for (std::size_t i = 0; i <= word.size(); ++i) {
        const auto left = word.substr(0, i);
        const auto right = word.substr(i);
        if (!right.empty()) out.insert(left + right.substr(1));
        if (right.size() > 1) out.insert(left + right[1] + right[0] + right.substr(2));
        for (char c : letters) {
            if (!right.empty()) out.insert(left + c + right.substr(1));
            out.insert(left + c + right);
        }
    }
    return out;
}

std::map<std::string, double> brute_force_posteriors(
    const std::vector<electionpulse::sentiment::LabeledDoc>& docs, double alpha,
    const std::vector<std::string>& query) {
    std::map<std::string, std::size_t> doc_count;
    std::map<std::string, std::map<std::string, std::size_t>> word_count;
    std::map<std::string, std::size_t> label_tokens;
    std::set<std::string> vocab;
    for (const auto& d : docs) {
        ++doc_count[d.label];
        for (const auto& t : d.tokens) {
            ++word_count[d.label][t];
            ++label_tokens[d.label];
            vocab.insert(t);
        }
    }
    const double V = static_cast<double>(vocab.size());
    std::map<std::string, double> joint;
    double evidence = 0.0;
    for (const auto& [label, n] : doc_count) {
        double p = static_cast<double>(n) / static_cast<double>(docs.size());
        for (const auto& t : query) {
            if (!vocab.contains(t)) continue;
            const double c = static_cast<double>(word_count[label][t]);
            p *= (c + alpha) / (static_cast<double>(label_tokens[label]) + alpha * V);
        }
        joint[label] = p;
        evidence += p;
    }
    for (auto& [label, p] : joint) p /= evidence;
    return joint;
}

std::optional<std::size_t> bucket_oracle(int hour) {
    if (hour < 6 || hour > 23) return std::nullopt;
    return std::min<std::size_t>(static_cast<std::size_t>((hour - 6) / 2), 7);
}

std::optional<std::string> sole_oracle(const SeriesFixture& fx, std::size_t tweet) {
    const auto& planted = fx.planted[tweet];
    std::set<std::string> identities;
    std::set<std::string> absorbed;
    for (const auto& id : fx.scope) {
        const auto* actor = fx.actors.find(id);
        if (actor && actor->components && planted.contains(id)) {
            absorbed.insert(actor->components->first);
            absorbed.insert(actor->components->second);
        }
    }
    for (const auto& id : fx.scope) {
        if (!planted.contains(id)) continue;
        identities.insert(id);
    }
    for (const auto& a : absorbed) identities.erase(a);
    if (identities.size() != 1) return std::nullopt;
    return *identities.begin();
}

std::map<std::pair<std::string, std::size_t>, CellOracle> series_oracle(const SeriesFixture& fx) {
    std::map<std::pair<std::string, std::size_t>, CellOracle> cells;
    for (std::size_t i = 0; i < fx.tweets.size(); ++i) {
        const auto sole = sole_oracle(fx, i);
        if (!sole) continue;
        // make_tweet stores 2017-11-18 local time at +01:00
        const auto local = fx.tweets[i].created_at.instant + std::chrono::hours{1};
        const auto hour = static_cast<int>(
            std::chrono::floor<std::chrono::hours>(local - std::chrono::floor<std::chrono::days>(local))
                .count());
        const auto bucket = bucket_oracle(hour);
        if (!bucket) continue;
        auto& c = cells[{*sole, *bucket}];
        ++c.count;
        c.polarity_sum += fx.polarity[i];
        c.subjectivity_sum += fx.subjectivity[i];
        for (const auto& t : fx.tweets[i].tokens) ++c.terms[t];
    }
    return cells;
}

PlantedCorpus planted_corpus(std::uint64_t seed, std::size_t n_docs, std::size_t length) {
    PlantedCorpus out;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const std::vector<std::string> prefixes{"alpha", "omega"};
    // decreasing weights so each topic has a distinct shape
    std::vector<double> weights;
    for (int i = 0; i < 10; ++i) weights.push_back(10.0 - i);
    const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
    out.phi.resize(2);
    for (std::size_t k = 0; k < 2; ++k)
        for (int i = 0; i < 10; ++i)
            out.phi[k][prefixes[k] + std::to_string(i)] = weights[i] / total;
    std::discrete_distribution<int> word_dist(weights.begin(), weights.end());

    for (std::size_t d = 0; d < n_docs; ++d) {
        // mostly one topic, sometimes a mixture
        const double share = (d % 4 == 0) ? 0.5 : (d % 2 == 0 ? 0.9 : 0.1);
        std::vector<std::string> doc;
        for (std::size_t i = 0; i < length; ++i) {
            const std::size_t k = unit(rng) < share ? 0 : 1;
            doc.push_back(prefixes[k] + std::to_string(word_dist(rng)));
        }
        out.docs.push_back(std::move(doc));
    }
    return out;
}

namespace {

double best_alignment(std::size_t K, const std::function<double(std::size_t, std::size_t)>& tv) {
    std::vector<std::size_t> perm(K);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    double best = 1e300;
    do {
        double worst = 0.0;
        for (std::size_t k = 0; k < K; ++k) worst = std::max(worst, tv(k, perm[k]));
        best = std::min(best, worst);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

}  // namespace

double aligned_tv(const electionpulse::topics::TopicModel& model, const PlantedCorpus& planted) {
    const std::size_t K = model.k();
    if (K != planted.phi.size()) throw std::invalid_argument("topic count mismatch");
    return best_alignment(K, [&](std::size_t fitted, std::size_t truth) {
        double tv = 0.0;
        for (std::size_t w = 0; w < model.v(); ++w) {
            auto it = planted.phi[truth].find(model.vocabulary[w]);
            const double p = it == planted.phi[truth].end() ? 0.0 : it->second;
            tv += std::abs(model.phi(fitted, w) - p);
        }
        return tv / 2.0;
    });
}

double aligned_tv(const electionpulse::topics::TopicModel& a,
                  const electionpulse::topics::TopicModel& b) {
    if (a.k() != b.k() || a.vocabulary != b.vocabulary)
        throw std::invalid_argument("models are not comparable");
    return best_alignment(a.k(), [&](std::size_t i, std::size_t j) {
        double tv = 0.0;
        for (std::size_t w = 0; w < a.v(); ++w) tv += std::abs(a.phi(i, w) - b.phi(j, w));
        return tv / 2.0;
    });
}

}  // namespace ep_test
