#include <benchmark/benchmark.h>

#include "hurwitz/hurwitz.hpp"

using namespace hurwitz;

static void BM_MonodromySimple(benchmark::State& state) {
    const int degree = static_cast<int>(state.range(0));
    const int points = static_cast<int>(state.range(1));
    std::vector<int> transposition(static_cast<std::size_t>(degree - 1), 1);
    transposition[0] = 2;
    const MonodromyProblem problem{degree, std::vector<CycleType>(points, CycleType(transposition))};
    for (auto _ : state) benchmark::DoNotOptimize(count_classes(problem));
}
BENCHMARK(BM_MonodromySimple)->Args({3, 4})->Args({4, 6})->Args({5, 8})->Unit(benchmark::kMillisecond);

static void BM_DeJonquieresExpand(benchmark::State& state) {
    const auto g = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(de_jonquieres_expand(g, g + 8));
}
BENCHMARK(BM_DeJonquieresExpand)->Arg(3)->Arg(12)->Arg(40);

static void BM_DeterminantM(benchmark::State& state) {
    const IntersectionMatrix m = build_M(state.range(0), state.range(0) + 5);
    for (auto _ : state) benchmark::DoNotOptimize(det_exact(m.entries));
}
BENCHMARK(BM_DeterminantM)->Arg(3)->Arg(25)->Arg(1000);

static void BM_ScanIndependence(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(scan_independence({3, 25}, {1, 10}, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_ScanIndependence)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
