#include <benchmark/benchmark.h>

#include <gridwalk/solver.hpp>

using namespace gridwalk;

static void BM_SolveExact(benchmark::State& state) {
  const GridDims dims{state.range(0), state.range(1)};
  for (auto _ : state) {
    SolveResult res = solve_exact(dims);
    benchmark::DoNotOptimize(res.optimum);
  }
  state.SetLabel(std::to_string(dims.m) + "x" + std::to_string(dims.n));
}
BENCHMARK(BM_SolveExact)
    ->Args({2, 2})
    ->Args({2, 4})
    ->Args({3, 3})
    ->Args({3, 4})
    ->Args({2, 7})
    ->Args({4, 4})
    ->Args({3, 6})
    ->Unit(benchmark::kMillisecond);

// the heaviest grid inside the default cap; one measured pass is plenty
static void BM_SolveExact20Cells(benchmark::State& state) {
  for (auto _ : state) {
    SolveResult res = solve_exact({4, 5});
    benchmark::DoNotOptimize(res.optimum);
  }
}
BENCHMARK(BM_SolveExact20Cells)->Iterations(1)->Unit(benchmark::kMillisecond);

static void BM_BruteForce(benchmark::State& state) {
  const GridDims dims{state.range(0), state.range(1)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(brute_force(dims));
  }
}
BENCHMARK(BM_BruteForce)
    ->Args({2, 3})
    ->Args({2, 4})
    ->Args({3, 3})
    ->Args({1, 9})
    ->Unit(benchmark::kMillisecond);

static void BM_MultisetBruteForce(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(multiset_brute_force(state.range(0), state.range(1)));
  }
}
BENCHMARK(BM_MultisetBruteForce)->Args({2, 5})->Args({1, 10});

BENCHMARK_MAIN();
