#include <benchmark/benchmark.h>

#include "sgp/families.hpp"
#include "sgp/graph6.hpp"
#include "sgp/solver.hpp"

using namespace sgp;

namespace {

void BM_GeodesicEnumeration(benchmark::State& state) {
  const ProductGraph pg =
      cartesian_product(path_graph(static_cast<int>(state.range(0))),
                        path_graph(static_cast<int>(state.range(0))));
  const int last = pg.base.order() - 1;
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_geodesics(pg.base, 0, last));
}
BENCHMARK(BM_GeodesicEnumeration)->Arg(4)->Arg(5)->Arg(6);

void BM_SolverK4K4(benchmark::State& state) {
  const ProductGraph pg = cartesian_product(complete_graph(4), complete_graph(4));
  for (auto _ : state) benchmark::DoNotOptimize(sg_product(pg).value);
}
BENCHMARK(BM_SolverK4K4);

void BM_SolverPrism(benchmark::State& state) {
  const ProductGraph pg =
      cartesian_product(complete_minus_edge(static_cast<int>(state.range(0))),
                        complete_graph(2));
  for (auto _ : state) benchmark::DoNotOptimize(sg_product(pg).value);
}
BENCHMARK(BM_SolverPrism)->Arg(5)->Arg(6);

void BM_Graph6RoundTrip(benchmark::State& state) {
  const std::string line = to_graph6(cycle_pendant(4));
  for (auto _ : state) benchmark::DoNotOptimize(to_graph6(from_graph6(line)));
}
BENCHMARK(BM_Graph6RoundTrip);

}  // namespace

BENCHMARK_MAIN();
