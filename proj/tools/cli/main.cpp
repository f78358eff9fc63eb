#include "runner.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

namespace app = electionpulse::app;

namespace {

struct Flags {
    std::string config;
    app::Overrides o;
    app::RunOptions run;
    bool quiet = false;
};

// Options every subcommand understands.
void add_common(CLI::App* sub, Flags& f) {
    sub->add_option("-c,--config", f.config, "Run configuration file")->required();
    sub->add_option("-o,--output-dir", f.o.output_dir, "Artifact directory");
    sub->add_option("--input", f.o.inputs, "JSON-lines tweet file(s); replaces [input] paths");
    sub->add_option("--timezone", f.o.timezone, "Fixed UTC offset of the local clock, e.g. +01:00");
    sub->add_option("--field-map", f.o.field_map, "JSON field mapping file");
    sub->add_option("--actors", f.o.actors, "Actor configuration file");
    sub->add_option("--stopwords", f.o.stopwords, "Stopword list");
    sub->add_flag("--extra-stopwords-from-actors{true}", f.o.extra_stopwords_from_actors,
                  "Treat actor names as stopwords");
    sub->add_flag("--no-spellcheck{false}", f.o.spellcheck, "Skip spelling correction");
    sub->add_flag("--no-stem{false}", f.o.stem, "Skip stemming");
    sub->add_option("--engine", f.o.engine, "Sentiment engine: pattern or swn");
    sub->add_option("--seed", f.o.seed, "RNG seed; beats ELECTIONPULSE_SEED and the config");
    sub->add_flag("-q,--quiet", f.quiet, "Only print errors");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App cli{"Election tweet analytics: ingest, sentiment, actor series, topics"};
    cli.require_subcommand(1);
    cli.set_version_flag("--version", ELECTIONPULSE_VERSION);
    Flags f;

    struct Subcommand {
        app::Command command;
        const char* name;
        const char* help;
    };
    const Subcommand subcommands[] = {
        {app::Command::kIngest, "ingest", "Parse, preprocess and export tweets with dataset stats"},
        {app::Command::kActors, "actors", "Validate and list the actor configuration"},
        {app::Command::kSentiment, "sentiment", "Per-tweet polarity and subjectivity scores"},
        {app::Command::kCompare, "compare", "Polarity distribution per classifier"},
        {app::Command::kTrainNbc, "train-nbc", "Train the Naive Bayes model on the labeled corpus"},
        {app::Command::kCounts, "counts", "Per-actor tweet counts and sentiment breakdown"},
        {app::Command::kCloud, "cloud", "Co-occurring term lists per actor"},
        {app::Command::kTimeseries, "timeseries", "Two-hourly sentiment series per scope actor"},
        {app::Command::kHeatmap, "heatmap", "Top terms per scope actor and time bucket"},
        {app::Command::kTopics, "topics", "LDA topics with weighted keywords"},
        {app::Command::kAll, "all", "Every analysis in one run"},
    };

    std::optional<app::Command> chosen;
    for (const auto& s : subcommands) {
        auto* sub = cli.add_subcommand(s.name, s.help);
        if (s.command == app::Command::kCompare) sub->alias("compare-classifiers");
        add_common(sub, f);
        if (s.command == app::Command::kTrainNbc || s.command == app::Command::kAll ||
            s.command == app::Command::kCompare)
            sub->add_option("--alpha", f.o.nbc_alpha, "Naive Bayes smoothing");
        if (s.command == app::Command::kHeatmap || s.command == app::Command::kAll)
            sub->add_option("--top-n", f.o.heatmap_top_n, "Terms per heatmap cell");
        if (s.command == app::Command::kCloud || s.command == app::Command::kAll) {
            sub->add_option("--cloud-top-n", f.o.cloud_top_n, "Terms per cloud");
        }
        if (s.command == app::Command::kCloud)
            sub->add_option("--actor", f.run.cloud_actor, "Only this actor");
        if (s.command == app::Command::kTopics || s.command == app::Command::kAll) {
            sub->add_option("--group", f.o.topic_group, "Actor whose tweets form the corpus");
            sub->add_option("--k", f.o.topics, "Number of topics");
            if (s.command == app::Command::kTopics)
                sub->add_option("--alpha", f.o.lda_alpha, "Document-topic prior");
            sub->add_option("--beta", f.o.lda_beta, "Topic-word prior");
            sub->add_option("--iters", f.o.iterations, "Gibbs sweeps");
            sub->add_option("--top-words", f.o.top_words, "Keywords per topic");
        }
        sub->callback([&chosen, c = s.command] { chosen = c; });
    }

    try {
        cli.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = cli.exit(e);
        return rc == 0 ? 0 : app::kExitConfig;
    }

    std::optional<std::string> seed_env;
    if (const char* env = std::getenv("ELECTIONPULSE_SEED")) seed_env = env;

    std::ostream* log = f.quiet ? nullptr : &std::cerr;
    const auto outcome = app::run_config_file(*chosen, f.config, f.o, f.run, seed_env, log);
    if (outcome.exit_code != app::kExitOk) {
        if (f.quiet) {
            for (const auto& d : outcome.diagnostics) std::cerr << "config: " << d << '\n';
            std::cerr << "error: " << outcome.error << '\n';
        }
        return outcome.exit_code;
    }
    if (!f.quiet)
        for (const auto& a : outcome.artifacts) std::cout << a << '\n';
    return app::kExitOk;
}
