#include "electionpulse/sentiment.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace st = electionpulse::sentiment;

namespace {

void BM_PatternScore(benchmark::State& state) {
    static const auto lex = st::PatternLexicon::load(EP_FIXTURE_DIR "/pattern_lexicon.csv");
    static const auto negators = st::load_word_list(EP_FIXTURE_DIR "/negators.txt");
    const std::vector<std::string> pool{"good", "not", "bad", "vote", "peaceful", "never", "great", "awka"};
    std::mt19937_64 rng(1);
    std::vector<std::string> tokens;
    for (int i = 0; i < state.range(0); ++i) tokens.push_back(pool[rng() % pool.size()]);
    for (auto _ : state) benchmark::DoNotOptimize(st::pattern_score(tokens, lex, negators));
}
BENCHMARK(BM_PatternScore)->Arg(8)->Arg(32);

void BM_SwnScore(benchmark::State& state) {
    static const auto lex = st::SenseLexicon::load(EP_FIXTURE_DIR "/sense_lexicon.txt");
    const std::vector<std::string> tokens{"good", "bad", "vote", "estimable", "peaceful", "calm"};
    for (auto _ : state) benchmark::DoNotOptimize(st::swn_score(lex, tokens));
}
BENCHMARK(BM_SwnScore);

}  // namespace
