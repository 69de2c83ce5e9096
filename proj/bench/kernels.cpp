// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "knotfiber/braid.hpp"
#include "knotfiber/invariants.hpp"
#include "knotfiber/presentation.hpp"

using namespace knotfiber;

namespace {

LinkDiagram el(int n) {
  return encircle(beta_braid(n), {AxisOrientation::Positive, AxisOrientation::Negative});
}

void BM_AlexanderParallel(benchmark::State& st) {
  const auto w = all_ones(wirtinger(el(static_cast<int>(st.range(0)))));
  for (auto _ : st) benchmark::DoNotOptimize(alexander_poly(w));
}

void BM_AlexanderSerial(benchmark::State& st) {
  const auto w = all_ones(wirtinger(el(static_cast<int>(st.range(0)))));
  for (auto _ : st) benchmark::DoNotOptimize(alexander_poly_serial(w));
}

void BM_HomflyParallel(benchmark::State& st) {
  const auto d = el(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(homfly(d));
}

void BM_HomflySerial(benchmark::State& st) {
  const auto d = el(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(homfly_serial(d));
}

void BM_ConjugateSearchParallel(benchmark::State& st) {
  const BraidWord a(3, {1, -2}), b(3, {-2, -2, 1, 2});
  for (auto _ : st) benchmark::DoNotOptimize(conjugate_search(a, b, static_cast<int>(st.range(0))));
}

void BM_ConjugateSearchSerial(benchmark::State& st) {
  const BraidWord a(3, {1, -2}), b(3, {-2, -2, 1, 2});
  for (auto _ : st) benchmark::DoNotOptimize(conjugate_search_serial(a, b, static_cast<int>(st.range(0))));
}

}  // namespace

BENCHMARK(BM_AlexanderParallel)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AlexanderSerial)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HomflyParallel)->DenseRange(0, 1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HomflySerial)->DenseRange(0, 1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConjugateSearchParallel)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConjugateSearchSerial)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
