#include "electionpulse/porter.hpp"
#include "electionpulse/preprocess.hpp"
#include "electionpulse/spelling.hpp"

#include <benchmark/benchmark.h>

#include <vector>

namespace pp = electionpulse::preprocess;

namespace {

const std::vector<std::string> kWords{"caresses", "ponies", "relational", "conditional", "generalization",
                                      "electioneering", "voting", "readers", "failing", "hopefulness"};

void BM_Stem(benchmark::State& state) {
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(pp::stem(kWords[i++ % kWords.size()]));
}
BENCHMARK(BM_Stem);

void BM_SpellCorrect(benchmark::State& state) {
    static const auto dict = pp::SpellingDictionary::load(EP_FIXTURE_DIR "/dictionary.tsv");
    const std::vector<std::string> typos{"electin", "votting", "peacefull", "secruity", "inecc"};
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(dict.correct(typos[i++ % typos.size()]));
}
BENCHMARK(BM_SpellCorrect);

void BM_CleanTokenize(benchmark::State& state) {
    const std::string text =
        "RT? no: INEC card readers failing in Awka &amp; Onitsha https://t.co/abc #AnambraDecides2017 @inecnigeria";
    for (auto _ : state) benchmark::DoNotOptimize(pp::tokenize(pp::clean(text)));
}
BENCHMARK(BM_CleanTokenize);

}  // namespace
