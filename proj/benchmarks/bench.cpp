// Microbenchmarks for the hot paths: modular series convolution on both
// sides of the transform threshold, generating-function expansion, the lift,
// and the two large modular pipelines.  Run with --benchmark_filter=... to
// isolate a group.

#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>
#include <vector>

#include "etalift/catalog.hpp"
#include "etalift/forms.hpp"
#include "etalift/frobenius.hpp"
#include "etalift/lift.hpp"
#include "etalift/series.hpp"

namespace {

using namespace etalift;

ModSeries random_mod_series(uint64_t modulus, size_t prec, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<uint64_t> c(prec);
  for (auto& x : c) x = rng() % modulus;
  if (!c.empty() && c[0] == 0) c[0] = 1;
  return ModSeries(modulus, 1, 0, std::move(c));
}

void BM_ModSeriesMul(benchmark::State& state) {
  const size_t n = (size_t)state.range(0);
  ModSeries a = random_mod_series(13, n, 1);
  ModSeries b = random_mod_series(13, n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(mul(a, b));
  state.SetComplexityN((int64_t)n);
}
BENCHMARK(BM_ModSeriesMul)->RangeMultiplier(4)->Range(256, 1 << 16)->Complexity();

void BM_ModSeriesInvert(benchmark::State& state) {
  const size_t n = (size_t)state.range(0);
  ModSeries a = random_mod_series((uint64_t)1e9 + 7, n, 3);
  for (auto _ : state) benchmark::DoNotOptimize(invert(a));
}
BENCHMARK(BM_ModSeriesInvert)->Arg(1 << 10)->Arg(1 << 14);

void BM_EulerProductMod(benchmark::State& state) {
  const size_t n = (size_t)state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(euler_product_mod(13, n));
}
BENCHMARK(BM_EulerProductMod)->Arg(1 << 14)->Arg(1 << 17);

void BM_EtaCompactMod(benchmark::State& state) {
  EtaQuotient eq = EtaQuotient::parse("1^5");
  const size_t steps = (size_t)state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(eta_compact_mod(eq, 13, steps));
}
BENCHMARK(BM_EtaCompactMod)->Arg(1 << 12)->Arg(1 << 15);

void BM_EtaCompactExact(benchmark::State& state) {
  EtaQuotient eq = EtaQuotient::parse("1^2 2^2 3^2 6^2");
  const size_t steps = (size_t)state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(eta_compact(eq, steps));
}
BENCHMARK(BM_EtaCompactExact)->Arg(512)->Arg(2048);

void BM_ShimuraLift(benchmark::State& state) {
  const LiftCase& lc = catalog_case("eta5");
  const long long T = state.range(0);
  FracSeries f = dense_form(lc, steps_for_lift(lc, T));
  for (auto _ : state) benchmark::DoNotOptimize(shimura_lift(lc.meta, f, lc.t));
}
BENCHMARK(BM_ShimuraLift)->Arg(100)->Arg(400);

void BM_UOperator(benchmark::State& state) {
  ModSeries a = random_mod_series(13, 1 << 18, 4);
  for (auto _ : state) benchmark::DoNotOptimize(u_operator(a, 5));
}
BENCHMARK(BM_UOperator);

void BM_A5SeriesMod(benchmark::State& state) {
  const size_t n = (size_t)state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(a5_series_mod(13, n));
}
BENCHMARK(BM_A5SeriesMod)->Arg(1 << 14)->Arg(1 << 17);

void BM_Cphi5SeriesMod(benchmark::State& state) {
  const size_t n = (size_t)state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(cphi5_series_mod(13, n));
}
BENCHMARK(BM_Cphi5SeriesMod)->Arg(1 << 14)->Arg(1 << 17);

void BM_BuildFl(benchmark::State& state) {
  const size_t steps = (size_t)state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(build_fl(13, steps));
}
BENCHMARK(BM_BuildFl)->Arg(200)->Arg(800);

}  // namespace

BENCHMARK_MAIN();
