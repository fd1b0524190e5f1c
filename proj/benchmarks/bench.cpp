#include <benchmark/benchmark.h>

#include "hausdim/hausdim.hpp"

using namespace hausdim;

static void BM_Assemble1D(benchmark::State& state) {
  const auto p = continued_fraction_problem({1, 2});
  const Mesh1D mesh(refine_domain_1d(p.maps, 2), 1.0 / static_cast<double>(state.range(0)));
  const auto prof = cf_profile(0.53, p.gamma);
  for (auto _ : state) benchmark::DoNotOptimize(assemble_1d(p, mesh, 0.53, prof));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(mesh.size()));
}
BENCHMARK(BM_Assemble1D)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

static void BM_Assemble2D(benchmark::State& state) {
  const auto p = complex_problem({DigitSetKind::kI3, {}, 0});
  const Mesh2D mesh(static_cast<int>(state.range(0)), 1, true);
  const auto prof = profile_2d(1.54, p.gamma);
  for (auto _ : state) benchmark::DoNotOptimize(assemble_2d(p, mesh, 1.54, prof));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(mesh.size()));
}
BENCHMARK(BM_Assemble2D)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

static void BM_PowerIterate(benchmark::State& state) {
  const auto p = continued_fraction_problem({1, 2});
  const Mesh1D mesh(refine_domain_1d(p.maps, 2), 1.0 / static_cast<double>(state.range(0)));
  const auto mats = assemble_1d(p, mesh, 0.53, cf_profile(0.53, p.gamma));
  for (auto _ : state) benchmark::DoNotOptimize(power_iterate(mats.B));
}
BENCHMARK(BM_PowerIterate)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
