#include <benchmark/benchmark.h>

#include "dilemma/ranking.hpp"

using namespace dilemma;

static void BM_RankExtended(benchmark::State& state) {
    RankingRequest req;
    req.n = static_cast<int>(state.range(0));
    req.w = 0.5;
    req.profile = CompetenceProfile::homogeneous(0.7);
    req.force = true;
    req.threads = static_cast<unsigned>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(rank_rules(req).size());
}
BENCHMARK(BM_RankExtended)->Args({5, 1})->Args({7, 1})->Args({7, 2})->Unit(benchmark::kMillisecond);

static void BM_RankCompact(benchmark::State& state) {
    RankingRequest req;
    req.n = static_cast<int>(state.range(0));
    req.mode = RankingMode::compact;
    req.profile = CompetenceProfile::homogeneous(0.7);
    req.force = true;
    for (auto _ : state) benchmark::DoNotOptimize(rank_rules(req).size());
}
BENCHMARK(BM_RankCompact)->Arg(9)->Arg(11)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
