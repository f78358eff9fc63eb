#pragma once

#include "electionpulse/common.hpp"
#include "electionpulse/sentiment.hpp"
#include "electionpulse/topics.hpp"

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace electionpulse::app {

namespace fs = std::filesystem;

/// Everything a run needs, with every path resolved against the config
/// file's directory.
struct RunConfig {
    fs::path config_path;

    std::vector<fs::path> inputs;
    UtcOffset timezone;
    std::optional<fs::path> field_map;

    fs::path actors;
    /// Actors tracked by the series and heatmap; defaults to every candidate.
    std::vector<std::string> scope;

    fs::path stopwords;
    std::optional<fs::path> dictionary;
    bool spellcheck = true;
    bool stem = true;
    bool extra_stopwords_from_actors = false;
    std::size_t min_correct_length = 4;

    sentiment::Engine engine = sentiment::Engine::kPattern;
    fs::path pattern_lexicon;
    fs::path sense_lexicon;
    fs::path negators;
    std::optional<fs::path> labeled_corpus;
    double nbc_alpha = 1.0;
    double subjectivity_threshold = 0.5;
    double polarity_scale = 100.0;

    std::size_t heatmap_top_n = 10;
    std::size_t cloud_top_n = 50;

    topics::LdaParams lda;
    std::size_t top_words = 10;
    std::size_t min_doc_len = 1;
    /// Actor whose tweets form the topic corpus; empty means every kept tweet.
    std::string topic_group;
    std::map<std::size_t, std::string> topic_labels;

    fs::path output_dir;
};

/// Command-line values that take precedence over the file.
struct Overrides {
    std::vector<std::string> inputs;
    std::optional<std::string> timezone;
    std::optional<std::string> field_map;
    std::optional<std::string> stopwords;
    std::optional<bool> extra_stopwords_from_actors;
    std::optional<bool> spellcheck;
    std::optional<bool> stem;
    std::optional<std::string> engine;
    std::optional<std::string> actors;
    std::optional<double> nbc_alpha;
    std::optional<std::size_t> heatmap_top_n;
    std::optional<std::size_t> cloud_top_n;
    std::optional<std::string> topic_group;
    std::optional<std::size_t> topics;
    std::optional<double> lda_alpha;
    std::optional<double> lda_beta;
    std::optional<std::size_t> iterations;
    std::optional<std::size_t> top_words;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> output_dir;
};

struct ValidationResult {
    std::optional<RunConfig> config;
    std::vector<std::string> diagnostics;
    /// Known as soon as the output setting parses, even if validation fails.
    std::optional<fs::path> output_dir;
};

/// Reads and validates the config file. Every violation is reported. The
/// seed comes from overrides, then seed_env (ELECTIONPULSE_SEED), then the
/// file. Throws IoError when the file itself cannot be read.
ValidationResult validate_config(const fs::path& path, const Overrides& overrides = {},
                                 const std::optional<std::string>& seed_env = std::nullopt);

}  // namespace electionpulse::app
