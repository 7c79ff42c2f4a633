#include <benchmark/benchmark.h>

#include <gridwalk/constructions.hpp>
#include <gridwalk/grid.hpp>
#include <gridwalk/report.hpp>

using namespace gridwalk;

static void BM_ConstructOptimal(benchmark::State& state) {
  const GridDims dims{state.range(0), state.range(1)};
  for (auto _ : state) {
    Labeling lab = construct_optimal(dims);
    benchmark::DoNotOptimize(lab.labels.data());
  }
  state.SetItemsProcessed(state.iterations() * dims.cell_count());
}
BENCHMARK(BM_ConstructOptimal)
    ->Args({4, 4})
    ->Args({40, 40})
    ->Args({39, 40})
    ->Args({200, 200})
    ->Args({1000, 1000});

static void BM_WalkLength(benchmark::State& state) {
  const GridDims dims{state.range(0), state.range(0)};
  const Labeling lab = construct_optimal(dims);
  for (auto _ : state) {
    benchmark::DoNotOptimize(walk_length(lab));
  }
  state.SetItemsProcessed(state.iterations() * dims.cell_count());
}
BENCHMARK(BM_WalkLength)->Arg(40)->Arg(200)->Arg(1000);

static void BM_FormatParseRoundTrip(benchmark::State& state) {
  const Labeling lab = construct_optimal({state.range(0), state.range(0)});
  for (auto _ : state) {
    Labeling back = parse_labeling(format_labeling(lab));
    benchmark::DoNotOptimize(back.labels.data());
  }
}
BENCHMARK(BM_FormatParseRoundTrip)->Arg(10)->Arg(40)->Unit(benchmark::kMicrosecond);

static void BM_BuildSweepTableOnly(benchmark::State& state) {
  SweepOptions options;
  options.solve_cap = 0;
  for (auto _ : state) {
    auto rows = build_sweep(1, state.range(0), 1, state.range(0), options);
    benchmark::DoNotOptimize(rows.data());
  }
}
BENCHMARK(BM_BuildSweepTableOnly)->Arg(12)->Arg(40);

static void BM_BuildSweepWithSolves(benchmark::State& state) {
  for (auto _ : state) {
    auto rows = build_sweep(1, 12, 1, 12, {});
    benchmark::DoNotOptimize(rows.data());
  }
}
BENCHMARK(BM_BuildSweepWithSolves)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
