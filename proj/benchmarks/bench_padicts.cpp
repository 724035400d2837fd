#include <benchmark/benchmark.h>

#include <random>

#include "padicts/fbm.hpp"
#include "padicts/vladimirov.hpp"
#include "padicts/wavelets.hpp"

namespace {

padicts::SampledSeries random_window(std::uint32_t p, std::size_t n, bool mean_free) {
    std::mt19937_64 gen(12345);
    std::normal_distribution<double> dist;
    padicts::SampledSeries s;
    s.prime = p;
    s.samples.resize(n);
    std::complex<double> mean{0, 0};
    for (auto& v : s.samples) {
        v = {dist(gen), dist(gen)};
        mean += v;
    }
    if (mean_free) {
        mean /= static_cast<double>(n);
        for (auto& v : s.samples) v -= mean;
    }
    return s;
}

void BM_forward_transform(benchmark::State& state) {
    const std::uint32_t p = static_cast<std::uint32_t>(state.range(0));
    const auto n = static_cast<std::size_t>(state.range(1));
    const auto f = random_window(p, n, false);
    for (auto _ : state) benchmark::DoNotOptimize(padicts::forward(f));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(BM_forward_transform)->Args({2, 1024})->Args({3, 729});

void BM_apply_direct(benchmark::State& state) {
    const std::uint32_t p = static_cast<std::uint32_t>(state.range(0));
    const auto n = static_cast<std::size_t>(state.range(1));
    const auto f = random_window(p, n, false);
    padicts::OperatorConfig cfg{.prime = p, .alpha = 1.0,
                                .mode = padicts::OperatorMode::finite_section, .length = n};
    for (auto _ : state) benchmark::DoNotOptimize(padicts::apply_direct(f, cfg));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n) *
                            static_cast<std::int64_t>(n));
}
BENCHMARK(BM_apply_direct)->Args({2, 256})->Args({3, 243});

void BM_apply_spectral(benchmark::State& state) {
    const std::uint32_t p = static_cast<std::uint32_t>(state.range(0));
    const auto n = static_cast<std::size_t>(state.range(1));
    const auto f = random_window(p, n, true);
    padicts::OperatorConfig cfg{.prime = p, .alpha = 1.0,
                                .mode = padicts::OperatorMode::zero_extended, .length = n};
    for (auto _ : state) benchmark::DoNotOptimize(padicts::apply_spectral(f, cfg));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(BM_apply_spectral)->Args({2, 256})->Args({3, 243});

void BM_simulate(benchmark::State& state) {
    padicts::SimulationConfig cfg;
    cfg.prime = 2;
    cfg.alpha = 1.0;
    cfg.J = static_cast<std::uint32_t>(state.range(0));
    cfg.realizations = 100;
    cfg.seed = 7;
    for (auto _ : state) benchmark::DoNotOptimize(padicts::simulate(cfg));
    state.SetItemsProcessed(state.iterations() * 100);
}
BENCHMARK(BM_simulate)->Arg(5)->Arg(8);

void BM_estimate(benchmark::State& state) {
    padicts::SimulationConfig cfg;
    cfg.prime = 2;
    cfg.alpha = 1.0;
    cfg.J = 5;
    cfg.realizations = static_cast<std::uint64_t>(state.range(0));
    cfg.seed = 7;
    const auto batch = padicts::simulate(cfg);
    for (auto _ : state) benchmark::DoNotOptimize(padicts::estimate(batch));
}
BENCHMARK(BM_estimate)->Arg(2000);

} // namespace

BENCHMARK_MAIN();
