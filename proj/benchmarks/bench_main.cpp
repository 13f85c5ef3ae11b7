#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "fvbarrier/barrier_graph.hpp"
#include "fvbarrier/geometry.hpp"
#include "fvbarrier/grid_deploy.hpp"
#include "fvbarrier/line_model.hpp"
#include "fvbarrier/simulation.hpp"

using namespace fvbarrier;

static void BM_FullViewPoint(benchmark::State& state) {
  const LineDeployment dep = place_line_deployment(Segment({0.0, 0.0}, {100.0, 0.0}), 5.0);
  double x = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(full_view_covered_point({x, 0.0}, dep.cameras, kPi / 4.0));
    x = std::fmod(x + 0.37, 100.0);
  }
}
BENCHMARK(BM_FullViewPoint);

static void BM_PlanGridDeployment(benchmark::State& state) {
  const auto count = static_cast<std::uint64_t>(state.range(0));
  const double r = 10.0;
  const auto cams = random_deploy({100.0, 50.0}, count, 42, {r, kPi / 3.0, kPi / 4.0});
  for (auto _ : state)
    benchmark::DoNotOptimize(plan_grid_deployment(100.0, 50.0, cams, grid_length_bound(r)));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(count));
}
BENCHMARK(BM_PlanGridDeployment)->Arg(100)->Arg(1000)->Arg(10000);

static void BM_ShortestBarrier(benchmark::State& state) {
  const int side = static_cast<int>(state.range(0));
  std::vector<CellIndex> cells;
  for (int i = 1; i <= side; ++i)
    for (int j = 1; j <= side; ++j)
      if ((i * 7 + j * 13) % 5 != 0) cells.push_back({i, j});
  const CoverageGraph graph = build_graph(cells, side, side);
  for (auto _ : state) benchmark::DoNotOptimize(shortest_barrier(graph));
}
BENCHMARK(BM_ShortestBarrier)->Arg(10)->Arg(50)->Arg(200);
BENCHMARK_MAIN();
