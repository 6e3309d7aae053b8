#include <benchmark/benchmark.h>

#include "random_models.hpp"
#include "sullivan/coformal.hpp"
#include "sullivan/dsl.hpp"
#include "support.hpp"

using namespace sullivan;

static void BM_Rref(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  testing::Rng rng(1);
  std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(n));
  for (auto& r : rows) {
    for (auto& x : r) x = testing::uniform(rng, 0, 2) == 0 ? testing::small_rational(rng) : Rational(0);
  }
  const auto m = RatMatrix::from_dense(rows);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_Rref)->Arg(16)->Arg(32)->Arg(64);

static void BM_BettiWedge(benchmark::State& state) {
  const auto b = ce_quadratic_model(free_lie({{"a", 2}, {"b", 2}}, 12), 12);
  const int cutoff = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(betti(b, cutoff).dims());
}
BENCHMARK(BM_BettiWedge)->Arg(8)->Arg(12)->Arg(14);

static void BM_FreeLie(benchmark::State& state) {
  const int cutoff = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(free_lie({{"a", 2}, {"b", 2}, {"c", 3}}, cutoff).size());
}
BENCHMARK(BM_FreeLie)->Arg(8)->Arg(12);

static void BM_ToomerE53Limit(benchmark::State& state) {
  const auto lim = coformal_limit(testing::corpus("E53.sul").algebra("E53").algebra);
  for (auto _ : state) benchmark::DoNotOptimize(toomer(lim, 14).value);
}
BENCHMARK(BM_ToomerE53Limit);

static void BM_CoformalizeE54(benchmark::State& state) {
  const auto e54 = testing::corpus("E54.sul").algebra("E54").algebra;
  for (auto _ : state) benchmark::DoNotOptimize(coformalize(e54, 11).kind);
}
BENCHMARK(BM_CoformalizeE54);

static void BM_IsoSearchCP3(benchmark::State& state) {
  const auto cp3 = testing::corpus("CP3.sul").algebra("CP3").algebra;
  const auto lim = coformal_limit(cp3);
  for (auto _ : state) benchmark::DoNotOptimize(parametrized_iso_search(cp3, lim).kind);
}
BENCHMARK(BM_IsoSearchCP3);
BENCHMARK_MAIN();
