#pragma once

// Independent reference computations used by the unit and acceptance tests.
// Nothing here calls the library code it is meant to check.

#include "electionpulse/sentiment.hpp"
#include "electionpulse/topics.hpp"

#include "synth.hpp"

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace ep_test {

std::string read_file(const std::filesystem::path& path);

/// "left<TAB>right" lines.
std::vector<std::pair<std::string, std::string>> read_tsv_pairs(const std::filesystem::path& path);

// Spelling -----------------------------------------------------------------

/// Textbook restricted Damerau-Levenshtein DP.
std::size_t osa_oracle(const std::string& a, const std::string& b);

/// Scans the whole dictionary: highest count within distance 2, ties by
/// word; the word itself when it is in the dictionary or nothing is close.
std::string brute_force_correct(const std::map<std::string, std::uint64_t>& dict,
                                const std::string& word);

/// Norvig-style single-edit neighbourhood over a-z.
std::set<std::string> edits1(const std::string& word);

// Naive Bayes --------------------------------------------------------------

/// Posterior per label from raw counts, computed in linear space.
std::map<std::string, double> brute_force_posteriors(
    const std::vector<electionpulse::sentiment::LabeledDoc>& docs, double alpha,
    const std::vector<std::string>& query);

// Series -----------------------------------------------------------------

struct CellOracle {
    std::size_t count = 0;
    double polarity_sum = 0.0;
    double subjectivity_sum = 0.0;
    std::map<std::string, std::size_t> terms;
};

/// Bucket by clock hour: 6-7 -> 0, ..., 18-19 -> 6, 20-23 -> 7.
std::optional<std::size_t> bucket_oracle(int hour);

/// Scope identity of a tweet from its planted ids: a combined scope actor
/// whose parts were both planted stands in for them; anything else in scope
/// counts on its own. Returns the identity when exactly one remains.
std::optional<std::string> sole_oracle(const SeriesFixture& fx, std::size_t tweet);

/// (actor, bucket) -> cell, recomputed from the planted ids and raw clock.
std::map<std::pair<std::string, std::size_t>, CellOracle> series_oracle(const SeriesFixture& fx);

// LDA ----------------------------------------------------------------------

struct PlantedCorpus {
    std::vector<std::vector<std::string>> docs;
    /// planted word distribution per topic, keyed by term
    std::vector<std::map<std::string, double>> phi;
};

/// Two topics over disjoint 10-word vocabularies; each document draws a
/// topic mixture and then its tokens.
PlantedCorpus planted_corpus(std::uint64_t seed, std::size_t docs = 200, std::size_t length = 20);

/// Largest per-topic total-variation distance between the fitted phi and
/// the planted phi under the best topic alignment.
double aligned_tv(const electionpulse::topics::TopicModel& model, const PlantedCorpus& planted);

/// Same, between two fitted models with identical vocabularies.
double aligned_tv(const electionpulse::topics::TopicModel& a,
                  const electionpulse::topics::TopicModel& b);

}  // namespace ep_test
