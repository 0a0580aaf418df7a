#include <benchmark/benchmark.h>

#include "lexres/lexres.hpp"

namespace {

using namespace lexres;

// u = x1 x_{l+1}^{d-1}, v = x_l x_n^{d-1} in n variables with l = 2.
LexSegmentSpec family_spec(int n, int d) {
  const RingContext ring(n);
  const Monomial u = multiply(Monomial::variable(ring, 1), Monomial::variable(ring, 3, d - 1));
  const Monomial v = multiply(Monomial::variable(ring, 2), Monomial::variable(ring, n, d - 1));
  return with_split(make_spec(u, v));
}

void BM_PowerGenerators(benchmark::State& state) {
  const auto spec = family_spec(static_cast<int>(state.range(0)), 3);
  const int k = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(power_generators(spec, k));
}
BENCHMARK(BM_PowerGenerators)->Args({4, 2})->Args({5, 2})->Args({6, 2})->Args({5, 3})->Unit(benchmark::kMillisecond);

void BM_LinearQuotients(benchmark::State& state) {
  const auto power = power_generators(family_spec(static_cast<int>(state.range(0)), 3), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(linear_quotients_check(power));
  state.counters["generators"] = static_cast<double>(power.size());
}
BENCHMARK(BM_LinearQuotients)->Args({4, 2})->Args({5, 2})->Args({6, 2})->Args({5, 3})->Unit(benchmark::kMillisecond);

void BM_BuildResolution(benchmark::State& state) {
  const auto route = static_cast<GRoute>(state.range(2));
  const auto qs = linear_quotients_check(
      power_generators(family_spec(static_cast<int>(state.range(0)), 3), static_cast<int>(state.range(1))));
  for (auto _ : state) benchmark::DoNotOptimize(build_resolution(qs, {route}));
}
BENCHMARK(BM_BuildResolution)
    ->ArgsProduct({{4, 5, 6}, {2}, {static_cast<long>(GRoute::closed_form), static_cast<long>(GRoute::oracle),
                                    static_cast<long>(GRoute::closed_form_verified)}})
    ->Unit(benchmark::kMillisecond);

void BM_HilbertNumerator(benchmark::State& state) {
  const auto power = power_generators(family_spec(static_cast<int>(state.range(0)), 3), 2);
  const auto& gens = power.generators();
  for (auto _ : state) benchmark::DoNotOptimize(hilbert_numerator(gens));
}
BENCHMARK(BM_HilbertNumerator)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_RandomRank(benchmark::State& state) {
  const auto qs = linear_quotients_check(power_generators(family_spec(static_cast<int>(state.range(0)), 3), 2));
  const auto rc = build_resolution(qs);
  for (auto _ : state) benchmark::DoNotOptimize(random_rank_check(rc, 1, 1));
}
BENCHMARK(BM_RandomRank)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
