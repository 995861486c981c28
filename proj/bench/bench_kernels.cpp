// Serial reference vs OpenMP kernels.

#include <benchmark/benchmark.h>

#include <numbers>
#include <random>
#include <vector>

#include "ist/kernels.hpp"

namespace {

using namespace ist;

template <auto Fn>
void BM_mz_exclusion(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(Fn(state.range(0)));
}

template <auto Fn>
void BM_niven_tally(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(Fn(state.range(0)));
}

template <auto Fn>
void BM_chsh_exactness(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(Fn(20, state.range(0)));
}

template <auto Fn>
void BM_snap_batch(benchmark::State& state) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> z(-1.0, 1.0);
    std::uniform_real_distribution<double> phi(0.0, 2 * std::numbers::pi);
    std::vector<ContinuousDirection> dirs;
    for (int i = 0; i < 4096; ++i) dirs.emplace_back(std::acos(z(rng)), phi(rng));
    for (auto _ : state) benchmark::DoNotOptimize(Fn(dirs, state.range(0)));
}

}  // namespace

BENCHMARK(BM_mz_exclusion<kernels::serial::mz_exclusion>)->Arg(10007)->Arg(100003);
BENCHMARK(BM_mz_exclusion<kernels::parallel::mz_exclusion>)->Arg(10007)->Arg(100003);
BENCHMARK(BM_niven_tally<kernels::serial::niven_tally>)->Arg(360)->Arg(2000);
BENCHMARK(BM_niven_tally<kernels::parallel::niven_tally>)->Arg(360)->Arg(2000);
BENCHMARK(BM_chsh_exactness<kernels::serial::chsh_exactness_violations>)->Arg(1000);
BENCHMARK(BM_chsh_exactness<kernels::parallel::chsh_exactness_violations>)->Arg(1000);
BENCHMARK(BM_snap_batch<kernels::serial::snap_batch>)->Arg(64);
BENCHMARK(BM_snap_batch<kernels::parallel::snap_batch>)->Arg(64);

BENCHMARK_MAIN();
