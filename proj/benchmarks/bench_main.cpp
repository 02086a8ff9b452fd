#include <random>

#include <benchmark/benchmark.h>

#include "qgor/qgor.hpp"

namespace {

using namespace qgor;

void BM_RankRational(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937 rng(1);
  ExactMatrix m(n, n, FieldSpec::rationals());
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) m.set(r, c, static_cast<long long>(rng() % 7) - 3);
  }
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_RankRational)->Arg(16)->Arg(32)->Arg(64);

void BM_RankGF2(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937 rng(2);
  ExactMatrix m(n, n, FieldSpec::prime(2));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) m.set(r, c, rng() % 2);
  }
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_RankGF2)->Arg(64)->Arg(128);

void BM_BettiTorus(benchmark::State& state) {
  const auto& torus = fixture("csaszar-torus").complex;
  for (auto _ : state) benchmark::DoNotOptimize(reduced_betti(torus, FieldSpec()));
}
BENCHMARK(BM_BettiTorus);

void BM_HochsterTableTorus(benchmark::State& state) {
  const auto& torus = fixture("csaszar-torus").complex;
  for (auto _ : state) benchmark::DoNotOptimize(local_cohomology_table(torus, FieldSpec()));
}
BENCHMARK(BM_HochsterTableTorus);

void BM_ClassifyRP2(benchmark::State& state) {
  const auto& rp2 = fixture("rp2-6").complex;
  for (auto _ : state) benchmark::DoNotOptimize(classify(rp2, FieldSpec::prime(2)));
}
BENCHMARK(BM_ClassifyRP2);

}  // namespace

BENCHMARK_MAIN();
