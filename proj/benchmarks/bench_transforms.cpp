// Fast O(n 2^n) subset transforms against the naive O(3^n) double loops.

#include <benchmark/benchmark.h>

#include <random>

#include "infolattice/transforms.hpp"

using namespace infolattice;

namespace {

LatticeFunction random_function(unsigned n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uniform(-10.0, 10.0);
  LatticeFunction f{PowerSetLattice(n)};
  for (SubsetMask m : submasks(SubsetMask::full(n))) f.set(m, uniform(rng));
  return f;
}

}  // namespace

static void BM_ZetaFast(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const LatticeFunction g = random_function(n, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(zeta(g));
  }
  state.SetItemsProcessed(state.iterations() * (int64_t{1} << n));
}
BENCHMARK(BM_ZetaFast)->DenseRange(8, 16, 2);

static void BM_ZetaNaive(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const LatticeFunction g = random_function(n, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(naive::zeta(g));
  }
  state.SetItemsProcessed(state.iterations() * (int64_t{1} << n));
}
BENCHMARK(BM_ZetaNaive)->DenseRange(8, 14, 2);

static void BM_SignedTransformFast(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const LatticeFunction h = random_function(n, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(signed_transform(h, SignConvention::plus_one));
  }
  state.SetItemsProcessed(state.iterations() * (int64_t{1} << n));
}
BENCHMARK(BM_SignedTransformFast)->DenseRange(8, 16, 2);

static void BM_SignedTransformNaive(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const LatticeFunction h = random_function(n, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(naive::signed_transform(h, SignConvention::plus_one));
  }
  state.SetItemsProcessed(state.iterations() * (int64_t{1} << n));
}
BENCHMARK(BM_SignedTransformNaive)->DenseRange(8, 14, 2);

static void BM_MobiusRoundTrip(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const LatticeFunction g = random_function(n, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mobius_invert(zeta(g)));
  }
}
BENCHMARK(BM_MobiusRoundTrip)->DenseRange(8, 16, 4);

BENCHMARK_MAIN();
