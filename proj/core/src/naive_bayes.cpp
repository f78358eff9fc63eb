#include "electionpulse/common.hpp"
#include "electionpulse/csv.hpp"
#include "electionpulse/ini.hpp"
#include "electionpulse/preprocess.hpp"
#include "electionpulse/sentiment.hpp"

#include <cmath>
#include <fstream>
#include <limits>

namespace electionpulse::sentiment {

NbcModel nbc_train(std::span<const LabeledDoc> docs, double alpha) {
    if (!(alpha > 0.0) || !std::isfinite(alpha))
        throw TrainingError("smoothing alpha must be positive");
    if (docs.empty()) throw TrainingError("cannot train on an empty corpus");

    std::map<std::string, std::size_t> doc_counts;
    std::map<std::string, std::map<std::string, std::size_t>> word_counts;
    std::map<std::string, std::size_t> token_totals;
    NbcModel model;
    model.alpha = alpha;
    for (const auto& d : docs) {
        ++doc_counts[d.label];
        auto& wc = word_counts[d.label];
        for (const auto& t : d.tokens) {
            ++wc[t];
            ++token_totals[d.label];
            model.vocabulary.insert(t);
        }
    }
    if (doc_counts.size() < 2)
        throw TrainingError("corpus has a single label; at least two are required");
    if (model.vocabulary.empty()) throw TrainingError("corpus has an empty vocabulary");

    const double n_docs = static_cast<double>(docs.size());
    const double v = static_cast<double>(model.vocabulary.size());
    for (const auto& [label, n] : doc_counts) {
        model.priors[label] = static_cast<double>(n) / n_docs;
        const double denom = static_cast<double>(token_totals[label]) + alpha * v;
        auto& lk = model.likelihoods[label];
        const auto& wc = word_counts[label];
        for (const auto& w : model.vocabulary) {
            auto it = wc.find(w);
            const double c = it == wc.end() ? 0.0 : static_cast<double>(it->second);
            lk[w] = (c + alpha) / denom;
        }
    }
    return model;
}

NbcPrediction nbc_classify(const NbcModel& model, std::span<const std::string> tokens) {
    std::map<std::string, double> log_scores;
    for (const auto& [label, prior] : model.priors) {
        double s = std::log(prior);
        const auto& lk = model.likelihoods.at(label);
        for (const auto& t : tokens) {
            auto it = lk.find(t);
            if (it != lk.end()) s += std::log(it->second);
        }
        log_scores[label] = s;
    }
    NbcPrediction out;
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& [label, s] : log_scores) {
        if (s > best) {  // strict: earlier (smaller) label names win ties
            best = s;
            out.label = label;
        }
    }
    double norm = 0.0;
    for (const auto& [label, s] : log_scores) norm += std::exp(s - best);
    for (const auto& [label, s] : log_scores) out.posteriors[label] = std::exp(s - best) / norm;
    out.posterior = out.posteriors[out.label];
    return out;
}

std::vector<LabeledDoc> load_labeled_corpus(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open labeled corpus '" + path.string() + "'");
    return parse_labeled_corpus(in);
}

std::vector<LabeledDoc> parse_labeled_corpus(std::istream& in) {
    std::vector<LabeledDoc> docs;
    const auto rows = csv::read_all(in);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        if (r.size() < 2) continue;
        const auto label = std::string(ini::trim(r[0]));
        if (i == 0 && label == "label") continue;
        if (label.empty()) continue;
        docs.push_back(LabeledDoc{label, preprocess::tokenize(preprocess::clean(r[1]))});
    }
    return docs;
}

std::optional<PolarityClass> label_to_class(std::string_view label) {
    const auto l = preprocess::to_lower(label);
    if (l == "pos" || l == "positive") return PolarityClass::kPositive;
    if (l == "neu" || l == "neutral") return PolarityClass::kNeutral;
    if (l == "neg" || l == "negative") return PolarityClass::kNegative;
    return std::nullopt;
}

}  // namespace electionpulse::sentiment
