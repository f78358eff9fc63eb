#pragma once

#include "electionpulse/tweet.hpp"

#include <array>
#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace electionpulse::sentiment {

/// Polarity in [-1, 1], subjectivity in [0, 1]. Construction outside those
/// ranges throws ContractViolation.
class SentimentScore {
public:
    SentimentScore() = default;
    SentimentScore(double polarity, double subjectivity);

    [[nodiscard]] double polarity() const { return polarity_; }
    [[nodiscard]] double subjectivity() const { return subjectivity_; }

private:
    double polarity_ = 0.0;
    double subjectivity_ = 0.0;
};

// ---------------------------------------------------------------------------
// Sense lexicon (SentiWordNet 3.0 tab format)

struct SenseEntry {
    std::string lemma;
    char pos_tag = 'n';  // n, v, a, r (s is folded into a)
    int sense_rank = 1;
    double pos_score = 0.0;
    double neg_score = 0.0;
    double obj_score = 1.0;
};

struct WordSentiment {
    double pos = 0.0;
    double neg = 0.0;

    [[nodiscard]] double obj() const { return 1.0 - pos - neg; }
};

struct SenseLoadReport {
    std::size_t rows_read = 0;
    std::size_t rows_accepted = 0;
    std::size_t rows_rejected = 0;  // malformed or violating Pos + Neg + Obj = 1
    std::size_t entries = 0;
};

class SenseLexicon {
public:
    /// Throws IoError when the file cannot be opened.
    static SenseLexicon load(const std::filesystem::path& path);
    static SenseLexicon parse(std::istream& in);

    [[nodiscard]] const std::vector<SenseEntry>& entries() const { return entries_; }
    [[nodiscard]] const SenseLoadReport& report() const { return report_; }

    /// Senses of a lemma across all parts of speech, averaged with weight
    /// 1/sense_rank. nullopt for unknown lemmas.
    [[nodiscard]] std::optional<WordSentiment> word_sentiment(std::string_view lemma) const;

private:
    std::vector<SenseEntry> entries_;
    std::unordered_map<std::string, std::vector<std::size_t>> by_lemma_;
    SenseLoadReport report_;
};

/// Mean of (pos - neg) over tokens found in the lexicon; 0 when none match.
double swn_polarity(const SenseLexicon& lexicon, std::span<const std::string> tokens);

/// Polarity as swn_polarity; subjectivity = 1 - mean Obj over matched tokens.
SentimentScore swn_score(const SenseLexicon& lexicon, std::span<const std::string> tokens);

// ---------------------------------------------------------------------------
// Pattern lexicon ("lemma,polarity,subjectivity")

struct PatternEntry {
    std::string lemma;
    double polarity = 0.0;
    double subjectivity = 0.0;
};

struct PatternLoadReport {
    std::size_t rows_read = 0;
    std::size_t rows_rejected = 0;
    std::size_t lemmas = 0;
};

class PatternLexicon {
public:
    /// Duplicate lemma rows are averaged. Throws IoError when unreadable.
    static PatternLexicon load(const std::filesystem::path& path);
    static PatternLexicon parse(std::istream& in);
    static PatternLexicon from_entries(std::span<const PatternEntry> rows);

    [[nodiscard]] const PatternEntry* find(std::string_view lemma) const;
    [[nodiscard]] std::size_t size() const { return entries_.size(); }
    [[nodiscard]] const PatternLoadReport& report() const { return report_; }

private:
    std::map<std::string, PatternEntry, std::less<>> entries_;
    PatternLoadReport report_;
};

/// One word per line, '#' comments allowed.
std::set<std::string, std::less<>> load_word_list(const std::filesystem::path& path);
std::set<std::string, std::less<>> parse_word_list(std::istream& in);

/// Number of preceding tokens searched for a negator.
inline constexpr std::size_t kNegationWindow = 2;

/// Mean lexicon polarity over matched tokens; a match with a negator among
/// the kNegationWindow preceding tokens contributes -0.5 x its polarity.
/// Subjectivity is the plain mean. Negators themselves are not scored.
SentimentScore pattern_score(std::span<const std::string> tokens, const PatternLexicon& lexicon,
                             const std::set<std::string, std::less<>>& negators);

// ---------------------------------------------------------------------------
// Engines

enum class Engine { kPattern, kSwn };

std::string_view to_string(Engine engine);
/// "pattern" or "swn"; throws ConfigError otherwise.
Engine parse_engine(std::string_view name);

struct Lexicons {
    PatternLexicon pattern;
    SenseLexicon sense;
    std::set<std::string, std::less<>> negators;
};

struct ScoreLists {
    std::vector<double> polarity;
    std::vector<double> subjectivity;
};

SentimentScore score_tweet(const ProcessedTweet& tweet, const Lexicons& lexicons, Engine engine);

/// Parallel per-tweet score lists in input order.
ScoreLists score_all(std::span<const ProcessedTweet> tweets, const Lexicons& lexicons,
                     Engine engine);

// ---------------------------------------------------------------------------
// Classes and distributions

enum class PolarityClass { kPositive, kNeutral, kNegative };
enum class SubjectivityClass { kSubjective, kObjective };

std::string_view to_string(PolarityClass c);
std::string_view to_string(SubjectivityClass c);

/// Sign rule; throws ContractViolation outside [-1, 1].
PolarityClass polarity_class(double score);

/// subjective iff score > threshold; throws ContractViolation outside [0, 1].
SubjectivityClass subjectivity_class(double score, double threshold = 0.5);

struct PolarityDistribution {
    std::size_t total = 0;
    std::array<std::size_t, 3> counts{};  // positive, neutral, negative
    /// Hundredths of a percent, rounded half up: 5345 means 53.45%.
    std::array<long long, 3> basis_points{};

    [[nodiscard]] double percentage(PolarityClass c) const;
    [[nodiscard]] std::size_t count(PolarityClass c) const;
};

PolarityDistribution distribution(std::span<const PolarityClass> labels);
PolarityDistribution distribution_from_counts(std::size_t positive, std::size_t neutral,
                                              std::size_t negative);

/// "53.45" style rendering of a basis-point value.
std::string format_percentage(long long basis_points);

// ---------------------------------------------------------------------------
// Naive Bayes

struct LabeledDoc {
    std::string label;
    std::vector<std::string> tokens;
};

struct NbcModel {
    std::map<std::string, double> priors;
    /// label -> word -> P(word | label) over the full vocabulary
    std::map<std::string, std::map<std::string, double>> likelihoods;
    std::set<std::string> vocabulary;
    double alpha = 1.0;
};

struct NbcPrediction {
    std::string label;
    double posterior = 0.0;
    std::map<std::string, double> posteriors;
};

/// Multinomial Naive Bayes with additive smoothing. Throws TrainingError on
/// an empty corpus, fewer than two labels, or alpha <= 0.
NbcModel nbc_train(std::span<const LabeledDoc> docs, double alpha);

/// argmax of log P(label) + sum log P(word | label) over in-vocabulary
/// tokens; ties go to the smaller label name.
NbcPrediction nbc_classify(const NbcModel& model, std::span<const std::string> tokens);

/// CSV "label,text"; text is tokenized with tokenize(clean(text)).
std::vector<LabeledDoc> load_labeled_corpus(const std::filesystem::path& path);
std::vector<LabeledDoc> parse_labeled_corpus(std::istream& in);

/// Maps "pos"/"positive", "neu"/"neutral", "neg"/"negative" to a class.
std::optional<PolarityClass> label_to_class(std::string_view label);

// ---------------------------------------------------------------------------

struct ClassifierRow {
    std::string engine;
    PolarityDistribution distribution;
};

/// One distribution per engine over the same population, pattern first.
/// When nbc is given and its labels map to polarity classes a third row is
/// appended.
std::vector<ClassifierRow> compare_classifiers(std::span<const ProcessedTweet> tweets,
                                               const Lexicons& lexicons,
                                               const NbcModel* nbc = nullptr);

}  // namespace electionpulse::sentiment
