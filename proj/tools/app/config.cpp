#include "config.hpp"

#include "electionpulse/actors.hpp"
#include "electionpulse/ini.hpp"

#include <charconv>
#include <set>

namespace electionpulse::app {

namespace {

const std::map<std::string, std::set<std::string>, std::less<>>& known_keys() {
    static const std::map<std::string, std::set<std::string>, std::less<>> keys{
        {"input", {"paths", "timezone", "field_map"}},
        {"actors", {"config", "scope"}},
        {"preprocess",
         {"stopwords", "dictionary", "spellcheck", "stem", "extra_stopwords_from_actors",
          "min_correct_length"}},
        {"sentiment",
         {"engine", "pattern_lexicon", "sense_lexicon", "negators", "labeled_corpus", "nbc_alpha",
          "subjectivity_threshold", "polarity_scale"}},
        {"analytics", {"heatmap_top_n", "cloud_top_n"}},
        {"topics", {"k", "alpha", "beta", "iterations", "top_words", "min_doc_len", "group"}},
        {"topic_labels", {}},
        {"run", {"seed", "output_dir"}},
    };
    return keys;
}

class Reader {
public:
    Reader(const ini::Document& doc, fs::path base, std::vector<std::string>& diagnostics)
        : doc_(doc), base_(std::move(base)), diag_(diagnostics) {}

    std::optional<std::string> raw(std::string_view section, std::string_view key) const {
        return doc_.get(section, key);
    }

    void error(std::string_view section, std::string_view key, const std::string& msg) {
        diag_.push_back(doc_.source() + ": [" + std::string(section) + "] " + std::string(key) +
                        ": " + msg);
    }

    template <class T>
    void number(std::string_view section, std::string_view key, T& out) {
        auto v = raw(section, key);
        if (!v) return;
        T parsed{};
        auto [ptr, ec] = std::from_chars(v->data(), v->data() + v->size(), parsed);
        if (ec != std::errc{} || ptr != v->data() + v->size()) {
            error(section, key, "'" + *v + "' is not a valid number");
            return;
        }
        out = parsed;
    }

    void flag(std::string_view section, std::string_view key, bool& out) {
        auto v = raw(section, key);
        if (!v) return;
        if (*v == "true" || *v == "yes" || *v == "on" || *v == "1") {
            out = true;
        } else if (*v == "false" || *v == "no" || *v == "off" || *v == "0") {
            out = false;
        } else {
            error(section, key, "'" + *v + "' is not a boolean");
        }
    }

    fs::path resolve(std::string_view value) const {
        fs::path p{std::string(value)};
        return p.is_absolute() ? p : (base_ / p).lexically_normal();
    }

    std::optional<fs::path> path(std::string_view section, std::string_view key) {
        auto v = raw(section, key);
        if (!v || v->empty()) return std::nullopt;
        return resolve(*v);
    }

private:
    const ini::Document& doc_;
    fs::path base_;
    std::vector<std::string>& diag_;
};

fs::path resolve_cli(const std::string& value) {
    return fs::absolute(fs::path(value)).lexically_normal();
}

void require_file(const std::optional<fs::path>& p, std::string_view what,
                  std::vector<std::string>& diag) {
    if (!p) {
        diag.push_back(std::string(what) + " is not configured");
        return;
    }
    std::error_code ec;
    if (!fs::is_regular_file(*p, ec))
        diag.push_back(std::string(what) + " '" + p->string() + "' does not exist or is not a file");
}

}  // namespace

ValidationResult validate_config(const fs::path& path, const Overrides& o,
                                 const std::optional<std::string>& seed_env) {
    const auto doc = ini::Document::load(path);
    ValidationResult result;
    auto& diag = result.diagnostics;
    RunConfig cfg;
    cfg.config_path = fs::absolute(path).lexically_normal();
    Reader r(doc, cfg.config_path.parent_path(), diag);

    for (const auto& section : doc.sections()) {
        auto it = known_keys().find(section.name);
        if (it == known_keys().end()) {
            diag.push_back(doc.source() + ":" + std::to_string(section.line) +
                           ": unknown section [" + section.name + "]");
            continue;
        }
        if (section.name == "topic_labels") continue;
        for (const auto& e : section.entries)
            if (!it->second.contains(e.key))
                diag.push_back(doc.source() + ":" + std::to_string(e.line) + ": unknown key '" +
                               e.key + "' in [" + section.name + "]");
    }

    // output first, so a failure manifest can still be placed
    if (o.output_dir) {
        cfg.output_dir = resolve_cli(*o.output_dir);
    } else if (auto p = r.path("run", "output_dir")) {
        cfg.output_dir = *p;
    } else {
        diag.push_back("[run] output_dir is not configured");
    }
    if (!cfg.output_dir.empty()) result.output_dir = cfg.output_dir;

    // input
    if (!o.inputs.empty()) {
        for (const auto& s : o.inputs) cfg.inputs.push_back(resolve_cli(s));
    } else if (auto v = r.raw("input", "paths")) {
        for (const auto& s : ini::split_list(*v)) cfg.inputs.push_back(r.resolve(s));
    }
    if (cfg.inputs.empty()) diag.push_back("[input] paths is not configured");
    for (const auto& p : cfg.inputs) require_file(p, "input", diag);

    try {
        if (o.timezone) {
            cfg.timezone = UtcOffset::parse(*o.timezone);
        } else if (auto v = r.raw("input", "timezone")) {
            cfg.timezone = UtcOffset::parse(*v);
        }
    } catch (const ConfigError& e) {
        diag.push_back(std::string("timezone: ") + e.what());
    }
    if (o.field_map) {
        cfg.field_map = resolve_cli(*o.field_map);
    } else {
        cfg.field_map = r.path("input", "field_map");
    }
    if (cfg.field_map) {
        require_file(cfg.field_map, "field map", diag);
    }

    // actors
    std::optional<fs::path> actors_path =
        o.actors ? std::optional{resolve_cli(*o.actors)} : r.path("actors", "config");
    require_file(actors_path, "actor config", diag);
    std::optional<actors::ActorSet> actor_set;
    if (actors_path && fs::is_regular_file(*actors_path)) {
        cfg.actors = *actors_path;
        try {
            const auto adoc = ini::Document::load(*actors_path);
            std::vector<std::string> adiag;
            auto list = actors::ActorSet::parse_document(adoc, adiag);
            auto more = actors::ActorSet::validate(list);
            adiag.insert(adiag.end(), more.begin(), more.end());
            for (auto& d : adiag) diag.push_back("actor config: " + d);
            if (adiag.empty()) actor_set = actors::ActorSet::from_actors(std::move(list));
        } catch (const std::exception& e) {
            diag.push_back(std::string("actor config: ") + e.what());
        }
    }
    if (auto v = r.raw("actors", "scope")) cfg.scope = ini::split_list(*v);
    if (actor_set) {
        if (cfg.scope.empty()) {
            for (const auto& a : actor_set->actors())
                if (a.kind == actors::ActorKind::kCandidate) cfg.scope.push_back(a.id);
        }
        for (const auto& id : cfg.scope)
            if (!actor_set->find(id))
                diag.push_back("[actors] scope names unknown actor '" + id + "'");
    }

    // preprocess
    auto stop = o.stopwords ? std::optional{resolve_cli(*o.stopwords)}
                            : r.path("preprocess", "stopwords");
    require_file(stop, "stopword list", diag);
    if (stop) cfg.stopwords = *stop;
    cfg.dictionary = r.path("preprocess", "dictionary");
    r.flag("preprocess", "spellcheck", cfg.spellcheck);
    r.flag("preprocess", "stem", cfg.stem);
    r.flag("preprocess", "extra_stopwords_from_actors", cfg.extra_stopwords_from_actors);
    r.number("preprocess", "min_correct_length", cfg.min_correct_length);
    if (o.spellcheck) cfg.spellcheck = *o.spellcheck;
    if (o.stem) cfg.stem = *o.stem;
    if (o.extra_stopwords_from_actors) cfg.extra_stopwords_from_actors = *o.extra_stopwords_from_actors;
    if (cfg.spellcheck) require_file(cfg.dictionary, "spelling dictionary", diag);

    // sentiment
    try {
        if (o.engine) {
            cfg.engine = sentiment::parse_engine(*o.engine);
        } else if (auto v = r.raw("sentiment", "engine")) {
            cfg.engine = sentiment::parse_engine(*v);
        }
    } catch (const ConfigError& e) {
        diag.push_back(std::string("engine: ") + e.what());
    }
    auto pattern = r.path("sentiment", "pattern_lexicon");
    auto sense = r.path("sentiment", "sense_lexicon");
    auto negators = r.path("sentiment", "negators");
    require_file(pattern, "pattern lexicon", diag);
    require_file(sense, "sense lexicon", diag);
    require_file(negators, "negator list", diag);
    if (pattern) cfg.pattern_lexicon = *pattern;
    if (sense) cfg.sense_lexicon = *sense;
    if (negators) cfg.negators = *negators;
    cfg.labeled_corpus = r.path("sentiment", "labeled_corpus");
    if (cfg.labeled_corpus) require_file(cfg.labeled_corpus, "labeled corpus", diag);
    r.number("sentiment", "nbc_alpha", cfg.nbc_alpha);
    if (o.nbc_alpha) cfg.nbc_alpha = *o.nbc_alpha;
    if (!(cfg.nbc_alpha > 0.0)) diag.push_back("nbc_alpha must be positive");
    r.number("sentiment", "subjectivity_threshold", cfg.subjectivity_threshold);
    if (!(cfg.subjectivity_threshold >= 0.0 && cfg.subjectivity_threshold <= 1.0))
        diag.push_back("subjectivity_threshold must lie in [0, 1]");
    r.number("sentiment", "polarity_scale", cfg.polarity_scale);
    if (!(cfg.polarity_scale > 0.0)) diag.push_back("polarity_scale must be positive");

    // analytics
    r.number("analytics", "heatmap_top_n", cfg.heatmap_top_n);
    r.number("analytics", "cloud_top_n", cfg.cloud_top_n);
    if (o.heatmap_top_n) cfg.heatmap_top_n = *o.heatmap_top_n;
    if (o.cloud_top_n) cfg.cloud_top_n = *o.cloud_top_n;
    if (cfg.heatmap_top_n == 0) diag.push_back("heatmap_top_n must be at least 1");
    if (cfg.cloud_top_n == 0) diag.push_back("cloud_top_n must be at least 1");

    // topics
    r.number("topics", "k", cfg.lda.topics);
    r.number("topics", "alpha", cfg.lda.alpha);
    r.number("topics", "beta", cfg.lda.beta);
    r.number("topics", "iterations", cfg.lda.iterations);
    r.number("topics", "top_words", cfg.top_words);
    r.number("topics", "min_doc_len", cfg.min_doc_len);
    if (auto v = r.raw("topics", "group")) cfg.topic_group = *v;
    if (o.topics) cfg.lda.topics = *o.topics;
    if (o.lda_alpha) cfg.lda.alpha = *o.lda_alpha;
    if (o.lda_beta) cfg.lda.beta = *o.lda_beta;
    if (o.iterations) cfg.lda.iterations = *o.iterations;
    if (o.top_words) cfg.top_words = *o.top_words;
    if (o.topic_group) cfg.topic_group = *o.topic_group;
    if (cfg.lda.topics < 1) diag.push_back("topic count must be at least 1");
    if (!(cfg.lda.alpha > 0.0) || !(cfg.lda.beta > 0.0))
        diag.push_back("LDA alpha and beta must be positive");
    if (cfg.lda.iterations < 1) diag.push_back("LDA iterations must be at least 1");
    if (cfg.top_words < 1) diag.push_back("top_words must be at least 1");
    if (cfg.min_doc_len < 1) diag.push_back("min_doc_len must be at least 1");
    if (!cfg.topic_group.empty() && actor_set && !actor_set->find(cfg.topic_group))
        diag.push_back("topic group names unknown actor '" + cfg.topic_group + "'");
    if (const auto* labels = doc.find("topic_labels")) {
        for (const auto& e : labels->entries) {
            std::size_t id = 0;
            auto [ptr, ec] = std::from_chars(e.key.data(), e.key.data() + e.key.size(), id);
            if (ec != std::errc{} || ptr != e.key.data() + e.key.size()) {
                diag.push_back(doc.source() + ":" + std::to_string(e.line) +
                               ": topic label key '" + e.key + "' is not a topic number");
                continue;
            }
            if (id >= cfg.lda.topics) {
                diag.push_back(doc.source() + ":" + std::to_string(e.line) + ": label for topic " +
                               e.key + " but only " + std::to_string(cfg.lda.topics) +
                               " topics are fitted");
                continue;
            }
            cfg.topic_labels[id] = e.value;
        }
    }

    // seed: command line, then environment, then file
    r.number("run", "seed", cfg.lda.seed);
    if (seed_env && !seed_env->empty()) {
        std::uint64_t s = 0;
        auto [ptr, ec] = std::from_chars(seed_env->data(), seed_env->data() + seed_env->size(), s);
        if (ec != std::errc{} || ptr != seed_env->data() + seed_env->size()) {
            diag.push_back("ELECTIONPULSE_SEED '" + *seed_env + "' is not an unsigned integer");
        } else {
            cfg.lda.seed = s;
        }
    }
    if (o.seed) cfg.lda.seed = *o.seed;

    if (diag.empty()) result.config = std::move(cfg);
    return result;
}

}  // namespace electionpulse::app
