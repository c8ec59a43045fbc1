#include <benchmark/benchmark.h>

#include "orbent/dynkin.hpp"
#include "orbent/exact.hpp"
#include "orbent/reflection.hpp"
#include "orbent/symplectic.hpp"

using namespace orbent;

static void BM_OrbitCountB(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  const ProbVec p = ProbVec::parse("1/4,1/4,1/2");
  for (auto _ : state) benchmark::DoNotOptimize(orbit_count(Family::B, n, p));
}
BENCHMARK(BM_OrbitCountB)->RangeMultiplier(4)->Range(64, 8192);

static void BM_NormalizedLogOrbit(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  const ProbVec p = ProbVec::parse("1/2,1/2");
  for (auto _ : state) benchmark::DoNotOptimize(normalized_log_orbit(Family::D, n, p));
}
BENCHMARK(BM_NormalizedLogOrbit)->RangeMultiplier(4)->Range(64, 8192);

static void BM_LnNatural(benchmark::State& state) {
  const Natural x = factorial(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ln(x));
}
BENCHMARK(BM_LnNatural)->RangeMultiplier(8)->Range(64, 32768);

static void BM_QMultinomial(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  const std::vector<std::uint64_t> parts{n / 4, n / 4, n / 2};
  for (auto _ : state) benchmark::DoNotOptimize(q_multinomial(n, parts, 65536));
}
BENCHMARK(BM_QMultinomial)->RangeMultiplier(4)->Range(16, 1024);

static void BM_PoincareClosed(benchmark::State& state) {
  const auto r = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(poincare_closed(Family::B, r));
}
BENCHMARK(BM_PoincareClosed)->RangeMultiplier(4)->Range(8, 128);

static void BM_OrbitPoincare(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  const ProbVec p = ProbVec::parse("1/4,1/4,1/2");
  for (auto _ : state) benchmark::DoNotOptimize(orbit_poincare(Family::B, n, p));
}
BENCHMARK(BM_OrbitPoincare)->RangeMultiplier(4)->Range(16, 256);

static void BM_SpQuotient(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  const ProbVec p = ProbVec::parse("1/4,1/4,1/2");
  for (auto _ : state) benchmark::DoNotOptimize(sp_quotient_closed(n, p, 3));
}
BENCHMARK(BM_SpQuotient)->RangeMultiplier(4)->Range(16, 1024);

BENCHMARK_MAIN();
