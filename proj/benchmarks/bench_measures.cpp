// Measure-table construction and the verification hot paths by dimension.

#include <benchmark/benchmark.h>

#include <random>

#include "infolattice/distribution.hpp"
#include "infolattice/measures.hpp"
#include "infolattice/sum_rules.hpp"

using namespace infolattice;

namespace {

JointDistribution random_binary(unsigned n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uniform(0.05, 1.0);
  std::vector<VariableSpec> specs;
  for (unsigned i = 0; i < n; ++i) specs.push_back({"X" + std::to_string(i + 1), 2});
  std::vector<std::pair<ValueTuple, double>> pmf;
  double total = 0.0;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    ValueTuple t(n);
    for (unsigned i = 0; i < n; ++i) t[i] = (mask >> i) & 1U;
    const double w = uniform(rng);
    total += w;
    pmf.emplace_back(std::move(t), w);
  }
  for (auto& rec : pmf) rec.second /= total;
  return JointDistribution(std::move(specs), std::move(pmf));
}

}  // namespace

static void BM_EntropyLattice(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const JointDistribution d = random_binary(n, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(entropy_lattice(d));
  }
  state.SetItemsProcessed(state.iterations() * (int64_t{1} << n));
}
BENCHMARK(BM_EntropyLattice)->DenseRange(4, 12, 2);

static void BM_MeasureTableBuild(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const JointDistribution d = random_binary(n, 8);
  for (auto _ : state) {
    MeasureTable table(d);
    benchmark::DoNotOptimize(table);
  }
}
BENCHMARK(BM_MeasureTableBuild)->DenseRange(4, 12, 2);

static void BM_PathIndependenceFullSpan(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const MeasureTable table(random_binary(n, 9));
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_path_independence(
        table.interaction_table(), SubsetMask::empty_set(), SubsetMask::full(n)));
  }
}
BENCHMARK(BM_PathIndependenceFullSpan)->DenseRange(3, 7, 1);

static void BM_ConditionalOracle(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const JointDistribution d = random_binary(n, 10);
  const SubsetMask v = SubsetMask::from_indices({0, 1});
  const SubsetMask w = SubsetMask::from_indices({n - 2, n - 1});
  for (auto _ : state) {
    benchmark::DoNotOptimize(conditional_oracle_combination(d, v, w));
  }
}
BENCHMARK(BM_ConditionalOracle)->DenseRange(5, 9, 2);

BENCHMARK_MAIN();
