#include "electionpulse/topics.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace tp = electionpulse::topics;

namespace {

tp::Corpus synthetic_corpus(std::size_t docs, std::size_t length, std::size_t vocab) {
    std::mt19937_64 rng(7);
    std::vector<std::vector<std::string>> raw(docs);
    for (auto& d : raw)
        for (std::size_t i = 0; i < length; ++i) d.push_back("w" + std::to_string(rng() % vocab));
    return tp::build_corpus(raw, 1);
}

// Cost of one Gibbs sweep, measured as the fit time for a single iteration.
void BM_LdaSweep(benchmark::State& state) {
    const auto corpus = synthetic_corpus(static_cast<std::size_t>(state.range(0)), 20, 500);
    tp::LdaParams p;
    p.topics = 5;
    p.iterations = 1;
    for (auto _ : state) benchmark::DoNotOptimize(tp::lda_fit(corpus, p));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(corpus.token_count()));
}
BENCHMARK(BM_LdaSweep)->Arg(200)->Arg(2000);

}  // namespace
