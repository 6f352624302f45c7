#include <benchmark/benchmark.h>

#include <random>

#include "sensorfft/pipeline.hpp"
#include "sensorfft/spectral.hpp"
#include "sensorfft/synth.hpp"

namespace {

std::vector<double> random_signal(std::size_t n) {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<double> x(n);
    for (auto& v : x) v = dist(rng);
    return x;
}

void ForwardDft(benchmark::State& state) {
    const auto x = random_signal(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        auto s = sensorfft::forward_dft(x);
        benchmark::DoNotOptimize(s);
    }
    state.SetComplexityN(state.range(0));
}
// 96/97: paper-scale day; 1024: radix-2; 1000: mixed radix; 4093: prime (Bluestein).
BENCHMARK(ForwardDft)->Arg(96)->Arg(97)->Arg(1000)->Arg(1024)->Arg(4093)->Arg(4096);

void NaiveDft(benchmark::State& state) {
    const auto x = random_signal(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        auto s = sensorfft::naive_dft(x);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(NaiveDft)->Arg(96)->Arg(1024);

void PipelineDay(benchmark::State& state) {
    const auto series = sensorfft::generate(sensorfft::SynthConfig{});
    sensorfft::PipelineConfig cfg;
    cfg.threshold = 0.999;
    for (auto _ : state) {
        auto r = sensorfft::run(series, cfg);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(PipelineDay);

}  // namespace

BENCHMARK_MAIN();
