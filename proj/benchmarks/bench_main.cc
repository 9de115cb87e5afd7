#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "inlim/families.h"
#include "inlim/hausdorff.h"
#include "inlim/rotation.h"
#include "inlim/suspension.h"

namespace {

using namespace inlim;

void BM_TentPeriodicPoints(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(tent_periodic_points(1.8, n));
}
BENCHMARK(BM_TentPeriodicPoints)->Arg(8)->Arg(12)->Arg(16);

void BM_AttractorCloud(benchmark::State& state) {
  FattenedMap h(ManifoldModel::disk(), Family::tent(1.8), 0.01, 0.01);
  CloudSettings cs{static_cast<std::size_t>(state.range(0)), 1000, 100};
  for (auto _ : state) benchmark::DoNotOptimize(attract_cloud(h, cs, 1));
}
BENCHMARK(BM_AttractorCloud)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_Hausdorff(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<AmbientPoint> a(n), b(n);
  for (auto& p : a) p = {u(rng), u(rng)};
  for (auto& p : b) p = {u(rng), u(rng)};
  for (auto _ : state) benchmark::DoNotOptimize(hausdorff(a, b));
}
BENCHMARK(BM_Hausdorff)->Arg(1000)->Arg(20000)->Unit(benchmark::kMillisecond);

void BM_RotationInterval(benchmark::State& state) {
  const Family f = Family::standard(3.0, 0.4);
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rotation_interval(f, n));
}
BENCHMARK(BM_RotationInterval)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_TongueRow(benchmark::State& state) {
  TongueWindow win{1.0, 1.01, 0.0, 1.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(tongue_raster(0.5, win, 1, 64, 10000));
  }
}
BENCHMARK(BM_TongueRow)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
