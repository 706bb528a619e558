#include <benchmark/benchmark.h>

#include "dilemma/optimal.hpp"
#include "dilemma/probability.hpp"

using namespace dilemma;

static void BM_HomogeneousLaw(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto p = CompetenceProfile::homogeneous(0.7);
    for (auto _ : state) benchmark::DoNotOptimize(TableLaw(n, StateOfNature::PQ, p).ordered().data());
}
BENCHMARK(BM_HomogeneousLaw)->Arg(7)->Arg(31)->Arg(99);

static void BM_PerVoterLaw(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::vector<double> thetas;
    for (int i = 0; i < n; ++i) thetas.push_back(0.55 + 0.4 * i / n);
    const auto p = CompetenceProfile::per_voter(thetas);
    for (auto _ : state) benchmark::DoNotOptimize(TableLaw(n, StateOfNature::PnQ, p).ordered().data());
}
BENCHMARK(BM_PerVoterLaw)->Arg(7)->Arg(31)->Arg(99);

static void BM_GoodnessIntervals(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto classes = enumerate_classes(n);
    for (auto _ : state)
        for (const auto& c : classes) benchmark::DoNotOptimize(goodness_intervals(c, 0.6).roots.size());
}
BENCHMARK(BM_GoodnessIntervals)->Arg(13)->Arg(99);

BENCHMARK_MAIN();
