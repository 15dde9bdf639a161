// Serial reference vs OpenMP kernels. Run with OMP_NUM_THREADS to vary the
// thread count.

#include <benchmark/benchmark.h>

#include "hooksum/hook_sums.hpp"
#include "hooksum/identities.hpp"
#include "hooksum/lattice_paths.hpp"
#include "hooksum/reference.hpp"
#include "hooksum/tableaux.hpp"

using namespace hooksum;

namespace {

const Partition kShape = make_partition({5, 4, 3, 2});

void syt_oracle_serial(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(reference::syt_enumerate_count(kShape));
}

void syt_oracle_parallel(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(syt_enumerate_count(kShape));
}

void hook_sum_serial(benchmark::State& state) {
    const auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(reference::hook_sum_direct({3, 1}, n));
}

void hook_sum_parallel(benchmark::State& state) {
    const auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(hook_sum_direct({3, 1}, n));
}

void humps_serial(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(reference::total_humps_enumerate(PathKind::Motzkin, 14));
}

void humps_parallel(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(total_humps(PathKind::Motzkin, 14, HumpMethod::Enumerate));
}

void verify_serial(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(reference::verify("lemma42", 2, 300));
}

void verify_parallel(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(verify("lemma42", 2, 300));
}

} // namespace

BENCHMARK(syt_oracle_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(syt_oracle_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(hook_sum_serial)->Arg(40)->Arg(60)->Unit(benchmark::kMillisecond);
BENCHMARK(hook_sum_parallel)->Arg(40)->Arg(60)->Unit(benchmark::kMillisecond);
BENCHMARK(humps_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(humps_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(verify_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(verify_parallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
