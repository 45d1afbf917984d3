#include <benchmark/benchmark.h>

#include "stanley/fixtures.hpp"
#include "stanley/gorenstein.hpp"
#include "stanley/homology.hpp"
#include "stanley/partitions.hpp"
#include "stanley/shelling.hpp"

using namespace stanley;

static void BM_ShellingDpDunceHat(benchmark::State& state) {
  auto c = fixtures::dunce_hat();
  for (auto _ : state) benchmark::DoNotOptimize(is_shellable(c).states);
}
BENCHMARK(BM_ShellingDpDunceHat);

static void BM_ShellingDpGorenstein(benchmark::State& state) {
  auto t = gorenstein::build_template(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_shellable(t.complex).shellable);
}
BENCHMARK(BM_ShellingDpGorenstein)->Arg(2)->Arg(3);

static void BM_SdepthCylinder(benchmark::State& state) {
  auto i = fixtures::cylinder_ideal();
  for (auto _ : state) benchmark::DoNotOptimize(sdepth(i).sdepth);
}
BENCHMARK(BM_SdepthCylinder);

static void BM_NicePartitionDunceHat(benchmark::State& state) {
  auto c = fixtures::dunce_hat();
  for (auto _ : state) benchmark::DoNotOptimize(find_nice_partition(c).stats.nodes);
}
BENCHMARK(BM_NicePartitionDunceHat);

static void BM_HomologyRank(benchmark::State& state) {
  auto c = fixtures::hachimori().delta;
  for (auto _ : state) benchmark::DoNotOptimize(reduced_homology(c, CoefficientField::rationals()).reduced_betti.size());
}
BENCHMARK(BM_HomologyRank);

static void BM_CohenMacaulayThreads(benchmark::State& state) {
  auto c = fixtures::dunce_hat();
  int threads = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(is_cohen_macaulay(c, CoefficientField::rationals(), threads));
}
BENCHMARK(BM_CohenMacaulayThreads)->Arg(1)->Arg(4);

BENCHMARK_MAIN();
