#include "runner.hpp"

#include "digest.hpp"

#include "electionpulse/actors.hpp"
#include "electionpulse/analytics.hpp"
#include "electionpulse/csv.hpp"
#include "electionpulse/ingest.hpp"
#include "electionpulse/preprocess.hpp"
#include "electionpulse/sentiment.hpp"
#include "electionpulse/topics.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include <unistd.h>

#ifndef ELECTIONPULSE_VERSION
#define ELECTIONPULSE_VERSION "unknown"
#endif

namespace electionpulse::app {

namespace {

using json = nlohmann::ordered_json;

constexpr std::pair<Command, std::string_view> kCommandNames[] = {
    {Command::kIngest, "ingest"},         {Command::kActors, "actors"},
    {Command::kSentiment, "sentiment"},   {Command::kCompare, "compare"},
    {Command::kTrainNbc, "train-nbc"},    {Command::kCounts, "counts"},
    {Command::kCloud, "cloud"},           {Command::kTimeseries, "timeseries"},
    {Command::kHeatmap, "heatmap"},       {Command::kTopics, "topics"},
    {Command::kAll, "all"},
};

std::string utc_now() {
    const auto now = std::chrono::floor<std::chrono::seconds>(std::chrono::system_clock::now());
    return LocalTime{now, UtcOffset{std::chrono::minutes{0}}}.iso8601();
}

std::string fixed(double v, int decimals = 6) { return csv::format_fixed(v, decimals); }

std::string optional_fixed(const std::optional<double>& v, int decimals = 6) {
    return v ? fixed(*v, decimals) : std::string{};
}

json terms_json(const analytics::FrequencyTable& table) {
    json arr = json::array();
    for (const auto& [term, count] : table.terms) arr.push_back(json::array({term, count}));
    return arr;
}

// Writes into a private directory beside the final files; commit() moves
// them into place, destruction without commit discards them.
class Stager {
public:
    explicit Stager(fs::path out) : out_(std::move(out)) {
        fs::create_directories(out_);
        stage_ = out_ / (".staging-" + std::to_string(::getpid()));
        fs::remove_all(stage_);
        fs::create_directories(stage_);
    }
    Stager(const Stager&) = delete;
    Stager& operator=(const Stager&) = delete;
    ~Stager() {
        std::error_code ec;
        fs::remove_all(stage_, ec);
    }

    void write(const std::string& name, const std::string& content) {
        std::ofstream f(stage_ / name, std::ios::binary | std::ios::trunc);
        f << content;
        f.close();
        if (!f) throw IoError("cannot write artifact '" + name + "'");
        if (std::find(files_.begin(), files_.end(), name) == files_.end()) files_.push_back(name);
        digests_[name] = {content.size(), sha256_hex(content)};
    }

    void commit() {
        for (const auto& name : files_) fs::rename(stage_ / name, out_ / name);
    }

    [[nodiscard]] const std::vector<std::string>& files() const { return files_; }

    [[nodiscard]] json listing() const {
        json arr = json::array();
        for (const auto& name : files_) {
            const auto& [bytes, sha] = digests_.at(name);
            arr.push_back({{"file", name}, {"bytes", bytes}, {"sha256", sha}});
        }
        return arr;
    }

private:
    fs::path out_;
    fs::path stage_;
    std::vector<std::string> files_;
    std::map<std::string, std::pair<std::size_t, std::string>> digests_;
};

json config_snapshot(const RunConfig& c) {
    auto opt_path = [](const std::optional<fs::path>& p) -> json {
        return p ? json(p->string()) : json(nullptr);
    };
    json inputs = json::array();
    for (const auto& p : c.inputs) inputs.push_back(p.string());
    json labels = json::object();
    for (const auto& [id, label] : c.topic_labels) labels[std::to_string(id)] = label;
    return {
        {"config_path", c.config_path.string()},
        {"inputs", inputs},
        {"timezone", c.timezone.to_string()},
        {"field_map", opt_path(c.field_map)},
        {"actors", c.actors.string()},
        {"scope", c.scope},
        {"stopwords", c.stopwords.string()},
        {"dictionary", opt_path(c.dictionary)},
        {"spellcheck", c.spellcheck},
        {"stem", c.stem},
        {"extra_stopwords_from_actors", c.extra_stopwords_from_actors},
        {"min_correct_length", c.min_correct_length},
        {"engine", sentiment::to_string(c.engine)},
        {"pattern_lexicon", c.pattern_lexicon.string()},
        {"sense_lexicon", c.sense_lexicon.string()},
        {"negators", c.negators.string()},
        {"labeled_corpus", opt_path(c.labeled_corpus)},
        {"nbc_alpha", c.nbc_alpha},
        {"subjectivity_threshold", c.subjectivity_threshold},
        {"polarity_scale", c.polarity_scale},
        {"heatmap_top_n", c.heatmap_top_n},
        {"cloud_top_n", c.cloud_top_n},
        {"topics",
         {{"k", c.lda.topics},
          {"alpha", c.lda.alpha},
          {"beta", c.lda.beta},
          {"iterations", c.lda.iterations},
          {"top_words", c.top_words},
          {"min_doc_len", c.min_doc_len},
          {"group", c.topic_group},
          {"labels", labels}}},
        {"seed", c.lda.seed},
        {"output_dir", c.output_dir.string()},
    };
}

// Lazily loads and caches every intermediate result a command needs.
class Session {
public:
    Session(const RunConfig& cfg, std::ostream* log) : cfg_(cfg), log_(log) {}

    template <class F>
    auto timed(const std::string& name, F&& fn) {
        if (log_) *log_ << "[" << name << "] ..." << std::endl;
        const auto t0 = std::chrono::steady_clock::now();
        auto [value, count] = fn();
        const auto ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        stages_.push_back({{"name", name}, {"records", count}, {"millis", ms}});
        return std::move(value);
    }

    const actors::ActorSet& actor_set() {
        if (!actors_)
            actors_ = timed("load_actors", [&] {
                auto set = actors::ActorSet::load(cfg_.actors);
                return std::pair{std::move(set), set.actors().size()};
            });
        return *actors_;
    }

    const std::vector<TweetRecord>& records() {
        if (!records_) {
            records_ = timed("ingest", [&] {
                const auto fields =
                    cfg_.field_map ? ingest::FieldMap::load(*cfg_.field_map) : ingest::FieldMap{};
                std::vector<TweetRecord> all;
                std::unordered_set<std::string> seen;
                for (const auto& path : cfg_.inputs) {
                    auto parsed = ingest::parse_tweet_file(path, cfg_.timezone, fields);
                    report_.lines_read += parsed.report.lines_read;
                    report_.skipped += parsed.report.skipped;
                    for (const auto& [reason, n] : parsed.report.skipped_by_reason)
                        report_.skipped_by_reason[reason] += n;
                    for (auto& r : parsed.records) {
                        if (!seen.insert(r.id).second) {
                            ++report_.skipped;
                            ++report_.skipped_by_reason["duplicate_id"];
                            continue;
                        }
                        all.push_back(std::move(r));
                    }
                }
                report_.records = all.size();
                return std::pair{std::move(all), report_.records};
            });
        }
        return *records_;
    }

    const std::vector<ProcessedTweet>& kept() {
        if (!kept_) {
            const auto& recs = records();
            const auto& set = actor_set();
            kept_ = timed("preprocess", [&] {
                preprocess::PipelineConfig pc;
                pc.stopwords = preprocess::StopwordSet::load(cfg_.stopwords);
                if (cfg_.extra_stopwords_from_actors) {
                    for (const auto& w : set.alias_words()) {
                        pc.stopwords.add_extra(w);
                        pc.stopwords.add_extra(preprocess::stem_fixed(w));
                    }
                    pc.stopwords.set_use_extra(true);
                }
                pc.spellcheck = cfg_.spellcheck;
                if (cfg_.spellcheck && cfg_.dictionary)
                    pc.dictionary = preprocess::SpellingDictionary::load(*cfg_.dictionary);
                pc.stem = cfg_.stem;
                pc.min_correct_length = cfg_.min_correct_length;
                pc.protected_words = set.alias_words();
                const preprocess::Pipeline pipeline(std::move(pc));

                std::vector<ProcessedTweet> out;
                for (const auto& r : recs) {
                    auto res = pipeline.run(r);
                    if (res.tweet) {
                        out.push_back(std::move(*res.tweet));
                    } else if (res.reason == preprocess::RejectReason::kRetweet) {
                        ++retweets_;
                    } else {
                        ++empty_;
                    }
                }
                std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
                    if (a.created_at.instant != b.created_at.instant)
                        return a.created_at.instant < b.created_at.instant;
                    return a.record_id < b.record_id;
                });
                return std::pair{std::move(out), std::size_t{0}};
            });
            stages_.back()["records"] = kept_->size();
        }
        return *kept_;
    }

    const ingest::DatasetStats& stats() {
        if (!stats_) {
            const auto& recs = records();
            const auto& k = kept();
            const auto& set = actor_set();
            stats_ = timed("dataset_stats", [&] {
                auto s = ingest::dataset_stats(recs, k, set);
                return std::pair{std::move(s), k.size()};
            });
        }
        return *stats_;
    }

    const sentiment::Lexicons& lexicons() {
        if (!lexicons_)
            lexicons_ = timed("load_lexicons", [&] {
                sentiment::Lexicons lx;
                lx.pattern = sentiment::PatternLexicon::load(cfg_.pattern_lexicon);
                lx.sense = sentiment::SenseLexicon::load(cfg_.sense_lexicon);
                lx.negators = sentiment::load_word_list(cfg_.negators);
                const auto n = lx.pattern.size() + lx.sense.entries().size();
                return std::pair{std::move(lx), n};
            });
        return *lexicons_;
    }

    const sentiment::ScoreLists& scores() {
        if (!scores_) {
            const auto& k = kept();
            const auto& lx = lexicons();
            scores_ = timed("score", [&] {
                auto s = sentiment::score_all(k, lx, cfg_.engine);
                return std::pair{std::move(s), k.size()};
            });
        }
        return *scores_;
    }

    const sentiment::NbcModel* nbc() {
        if (!cfg_.labeled_corpus) return nullptr;
        if (!nbc_)
            nbc_ = timed("train_nbc", [&] {
                const auto docs = sentiment::load_labeled_corpus(*cfg_.labeled_corpus);
                auto model = sentiment::nbc_train(docs, cfg_.nbc_alpha);
                return std::pair{std::move(model), docs.size()};
            });
        return &*nbc_;
    }

    const preprocess::StopwordSet& stopwords() {
        if (!stopwords_) stopwords_ = preprocess::StopwordSet::load(cfg_.stopwords);
        return *stopwords_;
    }

    [[nodiscard]] json counts() const {
        json j = json::object();
        if (records_) {
            j["lines_read"] = report_.lines_read;
            j["records"] = report_.records;
            j["parse_skipped"] = report_.skipped;
            j["skipped_by_reason"] = report_.skipped_by_reason;
        }
        if (kept_) {
            j["retweets"] = retweets_;
            j["empty_after_preprocess"] = empty_;
            j["kept"] = kept_->size();
        }
        if (stats_) j["kept_matching_any"] = stats_->kept_matching_any;
        return j;
    }

    [[nodiscard]] const json& stages() const { return stages_; }
    [[nodiscard]] const ingest::ParseReport& parse_report() const { return report_; }
    [[nodiscard]] std::size_t retweets() const { return retweets_; }
    [[nodiscard]] std::size_t empty() const { return empty_; }

private:
    const RunConfig& cfg_;
    std::ostream* log_;
    json stages_ = json::array();
    ingest::ParseReport report_;
    std::size_t retweets_ = 0;
    std::size_t empty_ = 0;
    std::optional<actors::ActorSet> actors_;
    std::optional<std::vector<TweetRecord>> records_;
    std::optional<std::vector<ProcessedTweet>> kept_;
    std::optional<ingest::DatasetStats> stats_;
    std::optional<sentiment::Lexicons> lexicons_;
    std::optional<sentiment::ScoreLists> scores_;
    std::optional<sentiment::NbcModel> nbc_;
    std::optional<preprocess::StopwordSet> stopwords_;
};

std::string to_json_text(const json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------------------
// Artifact emitters

void emit_ingest(Session& s, const RunConfig&, Stager& out) {
    const auto& stats = s.stats();
    const auto& set = s.actor_set();
    json groups = json::array();
    for (const auto& a : set.actors()) {
        const auto& g = stats.per_group.at(a.id);
        groups.push_back(
            {{"actor", a.id}, {"kind", actors::to_string(a.kind)}, {"raw", g.raw}, {"kept", g.kept}});
    }
    json j{
        {"lines_read", s.parse_report().lines_read},
        {"total_raw", stats.total_raw},
        {"parse_skipped", s.parse_report().skipped},
        {"parse_skipped_by_reason", s.parse_report().skipped_by_reason},
        {"retweets", s.retweets()},
        {"empty_after_preprocess", s.empty()},
        {"total_kept", stats.total_kept},
        {"kept_matching_any", stats.kept_matching_any},
        {"coverage_pct", sentiment::format_percentage(stats.coverage_basis_points)},
        {"groups", groups},
    };
    out.write("dataset_stats.json", to_json_text(j));

    std::ostringstream csv_out;
    ingest::export_records(s.kept(), set, csv_out);
    out.write("tweets.csv", csv_out.str());
}

void emit_actors(Session& s, const RunConfig& cfg, Stager& out) {
    json arr = json::array();
    for (const auto& a : s.actor_set().actors()) {
        json row{{"id", a.id}, {"kind", actors::to_string(a.kind)}, {"aliases", a.aliases}};
        if (a.components)
            row["components"] = json::array({a.components->first, a.components->second});
        arr.push_back(row);
    }
    out.write("actors.json", to_json_text({{"scope", cfg.scope}, {"actors", arr}}));
}

void emit_sentiment(Session& s, const RunConfig& cfg, Stager& out) {
    const auto& kept = s.kept();
    const auto& scores = s.scores();
    std::ostringstream o;
    csv::write_row(o, {"id", "created_at", "bucket", "engine", "polarity", "subjectivity",
                       "polarity_class", "subjectivity_class"});
    const auto engine = sentiment::to_string(cfg.engine);
    for (std::size_t i = 0; i < kept.size(); ++i) {
        const auto p = scores.polarity[i];
        const auto q = scores.subjectivity[i];
        csv::write_row(
            o, {kept[i].record_id, kept[i].created_at.iso8601(), kept[i].bucket_label(), engine,
                fixed(p), fixed(q), sentiment::to_string(sentiment::polarity_class(p)),
                sentiment::to_string(
                    sentiment::subjectivity_class(q, cfg.subjectivity_threshold))});
    }
    out.write("scores.csv", o.str());
}

void emit_compare(Session& s, const RunConfig&, Stager& out) {
    const auto rows = sentiment::compare_classifiers(s.kept(), s.lexicons(), s.nbc());
    std::ostringstream o;
    csv::write_row(o, {"engine", "total", "positive", "neutral", "negative", "positive_pct",
                       "neutral_pct", "negative_pct"});
    for (const auto& r : rows) {
        const auto& d = r.distribution;
        csv::write_row(o, {r.engine, std::to_string(d.total), std::to_string(d.counts[0]),
                           std::to_string(d.counts[1]), std::to_string(d.counts[2]),
                           sentiment::format_percentage(d.basis_points[0]),
                           sentiment::format_percentage(d.basis_points[1]),
                           sentiment::format_percentage(d.basis_points[2])});
    }
    out.write("classifier_comparison.csv", o.str());
}

void emit_nbc(Session& s, const RunConfig& cfg, Stager& out) {
    const auto* model = s.nbc();
    if (!model) throw ConfigError("train-nbc needs [sentiment] labeled_corpus");
    json labels = json::array();
    for (const auto& [label, prior] : model->priors) {
        json lk = json::object();
        for (const auto& [word, p] : model->likelihoods.at(label)) lk[word] = p;
        labels.push_back({{"label", label}, {"prior", prior}, {"likelihoods", lk}});
    }
    out.write("nbc_model.json",
              to_json_text({{"alpha", cfg.nbc_alpha},
                            {"vocabulary_size", model->vocabulary.size()},
                            {"labels", labels}}));
}

void emit_counts(Session& s, const RunConfig& cfg, Stager& out) {
    const auto& stats = s.stats();
    const auto& scores = s.scores();
    const auto summary = analytics::actor_sentiment_summary(
        s.kept(), scores.polarity, scores.subjectivity, s.actor_set(), cfg.subjectivity_threshold);
    std::ostringstream o;
    csv::write_row(o, {"actor", "kind", "raw_tweets", "kept_tweets", "positive", "neutral",
                       "negative", "positive_pct", "neutral_pct", "negative_pct", "subjective",
                       "objective", "mean_polarity", "mean_subjectivity"});
    for (const auto& a : summary) {
        const auto& g = stats.per_group.at(a.actor);
        const auto& d = a.polarity;
        const bool any = d.total > 0;
        csv::write_row(
            o, {a.actor, std::string(actors::to_string(a.kind)), std::to_string(g.raw),
                std::to_string(g.kept), std::to_string(d.counts[0]), std::to_string(d.counts[1]),
                std::to_string(d.counts[2]),
                any ? sentiment::format_percentage(d.basis_points[0]) : "",
                any ? sentiment::format_percentage(d.basis_points[1]) : "",
                any ? sentiment::format_percentage(d.basis_points[2]) : "",
                std::to_string(a.subjective), std::to_string(a.objective),
                optional_fixed(a.mean_polarity), optional_fixed(a.mean_subjectivity)});
    }
    out.write("actor_counts.csv", o.str());
}

void emit_cloud(Session& s, const RunConfig& cfg, const RunOptions& opt, Stager& out) {
    const auto& set = s.actor_set();
    std::vector<std::string> ids;
    if (!opt.cloud_actor.empty()) {
        if (!set.find(opt.cloud_actor))
            throw ConfigError("cloud: unknown actor '" + opt.cloud_actor + "'");
        ids.push_back(opt.cloud_actor);
    } else {
        for (const auto& a : set.actors()) ids.push_back(a.id);
    }
    json arr = json::array();
    for (const auto& id : ids) {
        const auto table =
            analytics::cooccurrence_cloud(s.kept(), set, id, s.stopwords(), cfg.cloud_top_n);
        arr.push_back({{"actor", id}, {"terms", terms_json(table)}});
    }
    out.write("clouds.json", to_json_text({{"top_n", cfg.cloud_top_n}, {"clouds", arr}}));
}

void emit_timeseries(Session& s, const RunConfig& cfg, Stager& out) {
    const auto& scores = s.scores();
    const auto series = analytics::avg_sentiment_series(s.kept(), scores.polarity,
                                                        scores.subjectivity, s.actor_set(),
                                                        cfg.scope, cfg.polarity_scale);
    std::ostringstream o;
    csv::write_row(o, {"actor", "bucket", "count", "mean_polarity_x100", "mean_subjectivity"});
    for (const auto& row : series)
        for (std::size_t b = 0; b < analytics::kBucketCount; ++b) {
            const auto& c = row.cells[b];
            csv::write_row(o, {row.actor, std::string(kTimeBuckets[b].label),
                               std::to_string(c.count), optional_fixed(c.mean_polarity_scaled),
                               optional_fixed(c.mean_subjectivity)});
        }
    out.write("timeseries.csv", o.str());

    std::ostringstream c;
    csv::write_row(c, {"actor", "mean_polarity"});
    for (const auto& [id, mean] :
         analytics::combined_avg_polarity(s.kept(), scores.polarity, s.actor_set()))
        csv::write_row(c, {id, optional_fixed(mean)});
    out.write("combined_polarity.csv", c.str());
}

void emit_heatmap(Session& s, const RunConfig& cfg, Stager& out) {
    const auto map = analytics::frequency_heatmap(s.kept(), s.actor_set(), cfg.scope,
                                                  s.stopwords(), cfg.heatmap_top_n);
    json buckets = json::array();
    for (const auto& b : kTimeBuckets) buckets.push_back(b.label);
    json actors_json = json::object();
    for (std::size_t i = 0; i < map.actors.size(); ++i) {
        json row = json::object();
        for (std::size_t b = 0; b < analytics::kBucketCount; ++b) {
            const auto& cell = map.cells[i][b];
            row[std::string(kTimeBuckets[b].label)] = cell ? terms_json(*cell) : json(nullptr);
        }
        actors_json[map.actors[i]] = row;
    }
    out.write("heatmap.json", to_json_text({{"top_n", cfg.heatmap_top_n},
                                            {"buckets", buckets},
                                            {"actors", actors_json}}));
}

void emit_topics(Session& s, const RunConfig& cfg, Stager& out) {
    const auto& kept = s.kept();
    std::vector<const ProcessedTweet*> group;
    if (cfg.topic_group.empty()) {
        for (const auto& t : kept) group.push_back(&t);
    } else {
        const auto& set = s.actor_set();
        for (const auto& t : kept)
            if (actors::match_actors(t, set).contains(cfg.topic_group)) group.push_back(&t);
    }
    const std::string group_name = cfg.topic_group.empty() ? "all" : cfg.topic_group;
    const auto corpus = s.timed("build_corpus", [&] {
        auto c = topics::build_corpus(std::span<const ProcessedTweet* const>(group),
                                      cfg.min_doc_len, group_name);
        const auto n = c.docs.size();
        return std::pair{std::move(c), n};
    });
    const auto model = s.timed("lda", [&] {
        auto m = topics::lda_fit(corpus, cfg.lda);
        return std::pair{std::move(m), corpus.token_count()};
    });
    const auto report = topics::topic_report(model, cfg.top_words, cfg.topic_labels, group_name);

    json topics_json = json::array();
    std::ostringstream flat;
    csv::write_row(flat, {"topic", "label", "rank", "term", "weight"});
    for (const auto& t : report.topics) {
        json kw = json::array();
        for (std::size_t r = 0; r < t.keywords.size(); ++r) {
            const auto& [term, weight] = t.keywords[r];
            kw.push_back(json::array({term, weight}));
            csv::write_row(flat, {std::to_string(t.id), t.label, std::to_string(r + 1), term,
                                  fixed(weight, 9)});
        }
        topics_json.push_back({{"id", t.id}, {"label", t.label}, {"keywords", kw}});
    }
    out.write("topics.json",
              to_json_text({{"group", group_name},
                            {"k", cfg.lda.topics},
                            {"alpha", cfg.lda.alpha},
                            {"beta", cfg.lda.beta},
                            {"iterations", cfg.lda.iterations},
                            {"seed", cfg.lda.seed},
                            {"documents", corpus.docs.size()},
                            {"dropped_documents", corpus.dropped},
                            {"vocabulary", corpus.vocabulary.size()},
                            {"warnings", model.warnings},
                            {"topics", topics_json}}));
    out.write("topics.csv", flat.str());

    std::ostringstream docs;
    std::vector<std::string> header{"doc_id"};
    for (std::size_t k = 0; k < model.k(); ++k) header.push_back("topic_" + std::to_string(k));
    csv::write_row(docs, header);
    std::vector<std::string> row;
    for (std::size_t d = 0; d < model.d(); ++d) {
        row.assign(1, model.doc_ids[d]);
        for (double v : topics::doc_topics(model, d)) row.push_back(fixed(v, 9));
        csv::write_row(docs, row);
    }
    out.write("doc_topics.csv", docs.str());
}

void dispatch(Command c, Session& s, const RunConfig& cfg, const RunOptions& opt, Stager& out) {
    switch (c) {
    case Command::kIngest: emit_ingest(s, cfg, out); break;
    case Command::kActors: emit_actors(s, cfg, out); break;
    case Command::kSentiment: emit_sentiment(s, cfg, out); break;
    case Command::kCompare: emit_compare(s, cfg, out); break;
    case Command::kTrainNbc: emit_nbc(s, cfg, out); break;
    case Command::kCounts: emit_counts(s, cfg, out); break;
    case Command::kCloud: emit_cloud(s, cfg, opt, out); break;
    case Command::kTimeseries: emit_timeseries(s, cfg, out); break;
    case Command::kHeatmap: emit_heatmap(s, cfg, out); break;
    case Command::kTopics: emit_topics(s, cfg, out); break;
    case Command::kAll:
        emit_ingest(s, cfg, out);
        emit_sentiment(s, cfg, out);
        emit_compare(s, cfg, out);
        if (cfg.labeled_corpus) emit_nbc(s, cfg, out);
        emit_counts(s, cfg, out);
        emit_cloud(s, cfg, opt, out);
        emit_timeseries(s, cfg, out);
        emit_heatmap(s, cfg, out);
        emit_topics(s, cfg, out);
        break;
    }
}

json base_manifest(Command c, const std::string& started) {
    return {{"tool", "electionpulse"},
            {"version", ELECTIONPULSE_VERSION},
            {"command", to_string(c)},
            {"started_at", started}};
}

void write_manifest(const fs::path& dir, const json& manifest) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    const auto tmp = dir / (std::string(kManifestName) + ".tmp");
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        f << to_json_text(manifest);
    }
    fs::rename(tmp, dir / kManifestName, ec);
}

}  // namespace

std::string_view to_string(Command command) {
    for (const auto& [c, name] : kCommandNames)
        if (c == command) return name;
    return "unknown";
}

std::optional<Command> parse_command(std::string_view name) {
    if (name == "compare-classifiers") return Command::kCompare;
    for (const auto& [c, n] : kCommandNames)
        if (n == name) return c;
    return std::nullopt;
}

RunOutcome run(Command command, const RunConfig& cfg, const RunOptions& options,
               std::ostream* log) {
    RunOutcome outcome;
    const auto started = utc_now();
    json manifest = base_manifest(command, started);
    manifest["seed"] = cfg.lda.seed;
    manifest["config"] = config_snapshot(cfg);

    Session session(cfg, log);
    json artifacts = json::array();
    try {
        json inputs = json::array();
        for (const auto& p : cfg.inputs)
            inputs.push_back({{"path", p.string()},
                              {"bytes", fs::file_size(p)},
                              {"sha256", sha256_files(std::span(&p, 1))}});
        manifest["inputs"] = inputs;
        manifest["input_digest"] = sha256_files(cfg.inputs);

        Stager stager(cfg.output_dir);
        dispatch(command, session, cfg, options, stager);
        stager.commit();
        outcome.artifacts = stager.files();
        artifacts = stager.listing();
    } catch (const ConfigError& e) {
        outcome.exit_code = kExitConfig;
        outcome.error = e.what();
    } catch (const std::exception& e) {
        outcome.exit_code = kExitPipeline;
        outcome.error = e.what();
    }

    manifest["status"] = outcome.exit_code == kExitOk ? "ok" : "failed";
    manifest["exit_code"] = outcome.exit_code;
    manifest["error"] = outcome.error.empty() ? json(nullptr) : json(outcome.error);
    manifest["counts"] = session.counts();
    manifest["stages"] = session.stages();
    manifest["artifacts"] = artifacts;
    try {
        write_manifest(cfg.output_dir, manifest);
        outcome.artifacts.emplace_back(kManifestName);
    } catch (const std::exception& e) {
        if (outcome.exit_code == kExitOk) {
            outcome.exit_code = kExitPipeline;
            outcome.error = std::string("cannot write manifest: ") + e.what();
        }
    }
    if (log && !outcome.error.empty()) *log << "error: " << outcome.error << std::endl;
    return outcome;
}

RunOutcome run_config_file(Command command, const fs::path& config_path,
                           const Overrides& overrides, const RunOptions& options,
                           const std::optional<std::string>& seed_env, std::ostream* log) {
    ValidationResult v;
    try {
        v = validate_config(config_path, overrides, seed_env);
    } catch (const std::exception& e) {
        v.diagnostics.emplace_back(e.what());
    }
    if (v.config) return run(command, *v.config, options, log);

    RunOutcome outcome;
    outcome.exit_code = kExitConfig;
    outcome.diagnostics = v.diagnostics;
    outcome.error = "invalid configuration";
    if (log)
        for (const auto& d : v.diagnostics) *log << "config: " << d << std::endl;
    if (v.output_dir) {
        json manifest = base_manifest(command, utc_now());
        manifest["status"] = "failed";
        manifest["exit_code"] = kExitConfig;
        manifest["error"] = outcome.error;
        manifest["diagnostics"] = v.diagnostics;
        manifest["config_path"] = fs::absolute(config_path).string();
        manifest["artifacts"] = json::array();
        try {
            write_manifest(*v.output_dir, manifest);
            outcome.artifacts.emplace_back(kManifestName);
        } catch (const std::exception&) {
        }
    }
    return outcome;
}

}  // namespace electionpulse::app
