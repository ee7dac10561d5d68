// Serial reference vs OpenMP kernel. Arg 0 = serial, 1 = parallel.
// Override the corpus with MARKOVPASS_CORPUS.

#include <cstdlib>
#include <random>

#include <benchmark/benchmark.h>

#include "markovpass/codec.hpp"
#include "markovpass/parallel.hpp"

using namespace markovpass;

namespace {

const Corpus& corpus() {
    static const Corpus c = [] {
        const char* env = std::getenv("MARKOVPASS_CORPUS");
        return load_corpus(env ? env : MARKOVPASS_BENCH_CORPUS);
    }();
    return c;
}

Execution mode(const benchmark::State& state) {
    return state.range(1) == 0 ? Execution::Serial : Execution::Parallel;
}

void label(benchmark::State& state) {
    state.SetLabel(state.range(1) == 0 ? "serial" : "parallel/" + std::to_string(max_threads()));
}

void BM_BuildTable(benchmark::State& state) {
    const auto k = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(build_table(corpus(), k, mode(state)));
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * corpus().length()));
    label(state);
}

void BM_BuildModel(benchmark::State& state) {
    const auto k = static_cast<std::size_t>(state.range(0));
    const auto table = build_table(corpus(), k);
    for (auto _ : state)
        benchmark::DoNotOptimize(build_model(table, corpus().length(), corpus().fingerprint(), std::nullopt, mode(state)));
    label(state);
}

void BM_RoundTrip(benchmark::State& state) {
    const auto k = static_cast<std::size_t>(state.range(0));
    const auto model = build_model(corpus(), k);
    std::mt19937_64 rng(1);
    std::vector<BitString> inputs;
    for (int i = 0; i < 2000; ++i) inputs.push_back(BitString::from_integer(rng() >> 8, 56));
    for (auto _ : state) benchmark::DoNotOptimize(count_roundtrip_failures(model, inputs, mode(state)));
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * inputs.size()));
    label(state);
}

}  // namespace

BENCHMARK(BM_BuildTable)->ArgsProduct({{2, 4}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BuildModel)->ArgsProduct({{2, 4}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RoundTrip)->ArgsProduct({{2, 4}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
