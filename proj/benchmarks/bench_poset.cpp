#include <benchmark/benchmark.h>

#include "dilemma/antichain.hpp"
#include "dilemma/poset.hpp"

using namespace dilemma;

static void BM_BuildExtended(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(Poset(n, PosetMode::extended).covers().size());
}
BENCHMARK(BM_BuildExtended)->Arg(5)->Arg(9)->Arg(21)->Arg(51);

static void BM_CountAntichains(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Poset p(n, PosetMode::extended);
    for (auto _ : state) benchmark::DoNotOptimize(count_antichains(p, true));
}
BENCHMARK(BM_CountAntichains)->Arg(3)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

static void BM_CountQuotientAntichains(benchmark::State& state) {
    const Poset p(static_cast<int>(state.range(0)), PosetMode::quotient);
    for (auto _ : state) benchmark::DoNotOptimize(count_antichains(p, true));
}
BENCHMARK(BM_CountQuotientAntichains)->Arg(5)->Arg(9)->Arg(11)->Unit(benchmark::kMillisecond);

static void BM_Width(benchmark::State& state) {
    const Poset p(static_cast<int>(state.range(0)), PosetMode::extended);
    for (auto _ : state) benchmark::DoNotOptimize(widest_antichain_size(p));
}
BENCHMARK(BM_Width)->Arg(7)->Arg(15);

BENCHMARK_MAIN();
