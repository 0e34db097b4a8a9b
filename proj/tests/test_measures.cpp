#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>

#include "infolattice/measures.hpp"
#include "testutil.hpp"

using namespace infolattice;
using testutil::BruteForce;

namespace {

SubsetMask m(std::initializer_list<unsigned> idx) {
  return SubsetMask::from_indices(std::vector<unsigned>(idx));
}

/// xor triple extended with one independent fair bit as variable 4.
JointDistribution xor_with_noise() {
  std::vector<std::pair<ValueTuple, double>> pmf;
  const JointDistribution base = testutil::xor_triple();
  for (const auto& [tuple, p] : base.support()) {
    for (std::uint32_t b = 0; b < 2; ++b) {
      ValueTuple t = tuple;
      t.push_back(b);
      pmf.emplace_back(std::move(t), p / 2.0);
    }
  }
  return JointDistribution(testutil::binary_specs(4), std::move(pmf));
}

}  // namespace

TEST_CASE("measure table fixes the shared conventions") {
  const MeasureTable table(testutil::xor_triple());
  CHECK(table.entropy_table()[SubsetMask::empty_set()] == 0.0);
  CHECK(table.interaction_table()[SubsetMask::empty_set()] == 0.0);
  CHECK(table.multi_table()[SubsetMask::empty_set()] == 0.0);
  for (unsigned i = 0; i < 3; ++i) {
    CHECK(table.multi_table()[SubsetMask::single(i)] == 0.0);
    CHECK(table.interaction_table()[SubsetMask::single(i)] ==
          table.entropy_table()[SubsetMask::single(i)]);
  }
  CHECK_THROWS_AS(MeasureTable(JointDistribution({{"X1", 2}}, {{{0}, 0.4}, {{1}, 0.4}})),
                  std::invalid_argument);
}

TEST_CASE("interaction of independent bits vanishes beyond singletons") {
  const MeasureTable table(testutil::independent_fair_bits(3));
  const LatticeFunction& inter = table.interaction_table();
  for (SubsetMask tau : submasks(SubsetMask::full(3))) {
    const double expected = tau.count() == 1 ? 1.0 : 0.0;
    CHECK(inter[tau] == doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("interaction of the XOR triple: pairs vanish, triple is -1") {
  const MeasureTable table(testutil::xor_triple());
  const LatticeFunction& inter = table.interaction_table();
  for (SubsetMask tau : submasks(SubsetMask::full(3))) {
    if (tau.count() == 2) CHECK(inter[tau] == doctest::Approx(0.0).epsilon(1e-12));
  }
  CHECK(inter[SubsetMask::full(3)] == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("three-variable interaction expansion, term for term") {
  const JointDistribution d = testutil::random_binary_distribution(3, 2024);
  const MeasureTable table(d);
  const LatticeFunction& h = table.entropy_table();
  const LatticeFunction& inter = table.interaction_table();

  CHECK(inter[SubsetMask::full(3)] ==
        doctest::Approx(h[m({0})] + h[m({1})] + h[m({2})] - h[m({0, 1})] - h[m({0, 2})] -
                        h[m({1, 2})] + h[m({0, 1, 2})])
            .epsilon(1e-12));
  CHECK(inter[m({0, 1})] == doctest::Approx(h[m({0})] + h[m({1})] - h[m({0, 1})]).epsilon(1e-12));
  CHECK(inter[m({0})] == doctest::Approx(h[m({0})]).epsilon(1e-12));

  // and the dual expansion recovers H from I with the same coefficients
  CHECK(h[SubsetMask::full(3)] ==
        doctest::Approx(inter[m({0})] + inter[m({1})] + inter[m({2})] - inter[m({0, 1})] -
                        inter[m({0, 2})] - inter[m({1, 2})] + inter[m({0, 1, 2})])
            .epsilon(1e-12));
}

TEST_CASE("interaction matches the brute-force oracle") {
  const JointDistribution d = testutil::random_distribution({{"a", 2}, {"b", 3}, {"c", 2}}, 5150);
  const MeasureTable table(d);
  const BruteForce oracle(d);
  for (SubsetMask nu : submasks(SubsetMask::full(3))) {
    CHECK(table.interaction_table()[nu] == doctest::Approx(oracle.interaction(nu)).epsilon(1e-12));
  }
}

TEST_CASE("entropy_from_interaction inverts interaction_lattice") {
  for (unsigned n = 2; n <= 6; ++n) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const MeasureTable table(testutil::random_binary_distribution(n, 100 * n + seed));
      const LatticeFunction recovered = entropy_from_interaction(table.interaction_table());
      for (SubsetMask tau : submasks(SubsetMask::full(n))) {
        CHECK(recovered[tau] == doctest::Approx(table.entropy_table()[tau]).epsilon(1e-13));
      }
    }
  }
}

TEST_CASE("interaction with only singleton mass gives additive entropy") {
  LatticeFunction inter(PowerSetLattice(3), FunctionRole::interaction);
  inter.set(m({0}), 0.5);
  inter.set(m({1}), 1.0);
  inter.set(m({2}), 2.0);
  const LatticeFunction h = entropy_from_interaction(inter);
  CHECK(h[SubsetMask::full(3)] == doctest::Approx(3.5).epsilon(1e-12));
  CHECK(h[m({0, 2})] == doctest::Approx(2.5).epsilon(1e-12));
}

TEST_CASE("role tags are enforced") {
  const MeasureTable table(testutil::xor_triple());
  CHECK_THROWS_AS(interaction_lattice(table.interaction_table()), std::invalid_argument);
  CHECK_THROWS_AS(entropy_from_interaction(table.entropy_table()), std::invalid_argument);
  CHECK_THROWS_AS(multi_information(table.multi_table(), m({0})), std::invalid_argument);

  LatticeFunction bad_empty(PowerSetLattice(2), FunctionRole::entropy);
  bad_empty.set(SubsetMask::empty_set(), 0.25);
  CHECK_THROWS_AS(interaction_lattice(bad_empty), std::invalid_argument);
}

TEST_CASE("multi-information reference values") {
  const MeasureTable independent(testutil::independent_fair_bits(3));
  for (SubsetMask nu : submasks(SubsetMask::full(3))) {
    CHECK(multi_information(independent.entropy_table(), nu) ==
          doctest::Approx(0.0).epsilon(1e-12));
  }

  const MeasureTable identical(testutil::identical_fair_bits());
  CHECK(multi_information(identical.entropy_table(), SubsetMask::full(2)) ==
        doctest::Approx(1.0).epsilon(1e-12));

  const MeasureTable xorred(testutil::xor_triple());
  CHECK(multi_information(xorred.entropy_table(), SubsetMask::full(3)) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(multi_information(xorred.entropy_table(), SubsetMask::empty_set()) == 0.0);
  CHECK(multi_information(xorred.entropy_table(), m({1})) == 0.0);
}

TEST_CASE("multi-information is nonnegative on random pmfs") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const MeasureTable table(testutil::random_binary_distribution(4, 300 + seed));
    for (SubsetMask nu : submasks(SubsetMask::full(4))) {
      CHECK(table.multi_table()[nu] >= -1e-9);
    }
  }
}

TEST_CASE("M from I: XOR triple and the pair special case") {
  const MeasureTable table(testutil::xor_triple());
  CHECK(multi_from_interaction(table.interaction_table(), SubsetMask::full(3)) ==
        doctest::Approx(1.0).epsilon(1e-12));
  for (SubsetMask pair : submasks(SubsetMask::full(3))) {
    if (pair.count() != 2) continue;
    CHECK(multi_from_interaction(table.interaction_table(), pair) ==
          doctest::Approx(table.interaction_table()[pair]).epsilon(1e-12));
  }

  const MeasureTable independent(testutil::independent_fair_bits(3));
  CHECK(multi_from_interaction(independent.interaction_table(), SubsetMask::full(3)) ==
        doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("I from M: pair equals M, XOR triple recovers -1, singleton rejected") {
  const MeasureTable table(testutil::xor_triple());
  CHECK(interaction_from_multi(table.multi_table(), SubsetMask::full(3)) ==
        doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(interaction_from_multi(table.multi_table(), m({0, 1})) ==
        doctest::Approx(table.multi_table()[m({0, 1})]).epsilon(1e-12));
  CHECK_THROWS_AS(interaction_from_multi(table.multi_table(), m({0})), std::invalid_argument);
}

TEST_CASE("M dualities agree with the direct definitions on random pmfs") {
  for (unsigned n = 2; n <= 5; ++n) {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      const MeasureTable table(testutil::random_binary_distribution(n, 70 * n + seed));
      for (SubsetMask nu : submasks(SubsetMask::full(n))) {
        if (nu.count() < 2) continue;
        CHECK(multi_information(table.entropy_table(), nu) ==
              doctest::Approx(multi_from_interaction(table.interaction_table(), nu))
                  .epsilon(1e-10));
        CHECK(interaction_from_multi(table.multi_table(), nu) ==
              doctest::Approx(table.interaction_table()[nu]).epsilon(1e-10));
      }
    }
  }
}

TEST_CASE("delta reference values") {
  const MeasureTable independent(testutil::independent_fair_bits(2));
  CHECK(delta(independent, m({0}), 1).value == doctest::Approx(-1.0).epsilon(1e-12));

  const MeasureTable identical(testutil::identical_fair_bits());
  CHECK(delta(identical, m({0}), 1).value == doctest::Approx(0.0).epsilon(1e-12));

  const MeasureTable xorred(testutil::xor_triple());
  CHECK(delta(xorred, m({0, 1}), 2).value == doctest::Approx(-1.0).epsilon(1e-12));

  CHECK_THROWS_AS(delta(xorred, m({0, 1}), 1), std::invalid_argument);
}

TEST_CASE("delta routes agree everywhere on random pmfs") {
  for (unsigned n = 2; n <= 5; ++n) {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      const JointDistribution d = testutil::random_binary_distribution(n, 50 * n + seed);
      const MeasureTable table(d);
      const BruteForce oracle(d);
      for (unsigned x = 0; x < n; ++x) {
        for (SubsetMask base : submasks(SubsetMask::full(n).without(x))) {
          const DeltaRoutes routes = delta_routes(table, base, x);
          CHECK(routes.spread() < 1e-9);
          CHECK(routes.interaction_difference ==
                doctest::Approx(oracle.delta(base, x)).epsilon(1e-10));
        }
      }
    }
  }
}

TEST_CASE("delta from M: XOR value, precondition, and random agreement") {
  const MeasureTable xorred(testutil::xor_triple());
  CHECK(delta_from_multi(xorred.multi_table(), m({0, 1}), 2) ==
        doctest::Approx(-1.0).epsilon(1e-12));
  CHECK_THROWS_AS(delta_from_multi(xorred.multi_table(), m({0}), 2), std::invalid_argument);

  for (unsigned n = 4; n <= 5; ++n) {
    const MeasureTable table(testutil::random_binary_distribution(n, 800 + n));
    for (unsigned x = 0; x < n; ++x) {
      for (SubsetMask base : submasks(SubsetMask::full(n).without(x))) {
        if (base.count() < 2) continue;
        CHECK(delta_from_multi(table.multi_table(), base, x) ==
              doctest::Approx(delta(table, base, x).value).epsilon(1e-10));
      }
    }
  }
}

TEST_CASE("delta-entropy duality holds with the nonempty-subset sum") {
  // singleton base: both sides reduce to H(xy) - H(y)
  const MeasureTable pair_table(testutil::random_binary_distribution(2, 31337));
  CHECK(delta_duality_check(pair_table, m({0}), 1) < 1e-12);

  for (unsigned n = 3; n <= 5; ++n) {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      const MeasureTable table(testutil::random_binary_distribution(n, 60 * n + seed));
      for (unsigned x = 0; x < n; ++x) {
        for (SubsetMask base : submasks(SubsetMask::full(n).without(x))) {
          if (base.empty()) continue;
          CHECK(delta_duality_check(table, base, x) < 1e-9);
        }
      }
    }
  }
  const MeasureTable xorred(testutil::xor_triple());
  CHECK_THROWS_AS(delta_duality_check(xorred, SubsetMask::empty_set(), 1), std::invalid_argument);
}

TEST_CASE("including the empty subset would break the delta-entropy duality") {
  // with the tau = {} term the right side gains Delta({}; x) = H(x), so the
  // residual becomes exactly H(x) instead of 0
  const MeasureTable table(testutil::random_binary_distribution(2, 4711));
  const double h1 = table.entropy_table()[m({1})];
  const double lhs = table.entropy_table()[m({0, 1})] - table.entropy_table()[m({1})];
  double rhs_with_empty = 0.0;
  for (SubsetMask tau : submasks(m({0}))) {
    rhs_with_empty += -sign_plus(tau) * (table.interaction_table()[tau.with(1)] -
                                         table.interaction_table()[tau]);
  }
  CHECK(std::abs(lhs - rhs_with_empty) == doctest::Approx(h1).epsilon(1e-9));
}

TEST_CASE("four three-variable delta-duality identities in explicit form") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const MeasureTable table(testutil::random_binary_distribution(3, 7000 + seed));
    const LatticeFunction& h = table.entropy_table();
    const double d12_3 = delta(table, m({0, 1}), 2).value;
    const double d1_3 = delta(table, m({0}), 2).value;
    const double d2_3 = delta(table, m({1}), 2).value;

    CHECK(d12_3 - h[m({2})] ==
          doctest::Approx(h[m({0, 1, 2})] - h[m({0, 2})] - h[m({1, 2})]).epsilon(1e-10));
    CHECK(d1_3 == doctest::Approx(h[m({2})] - h[m({0, 2})]).epsilon(1e-10));
    CHECK(d2_3 == doctest::Approx(h[m({2})] - h[m({1, 2})]).epsilon(1e-10));
    CHECK(h[m({0, 1, 2})] - h[m({2})] == doctest::Approx(d12_3 - d1_3 - d2_3).epsilon(1e-10));
  }
}

TEST_CASE("conditional interaction: XOR and independence") {
  const MeasureTable xorred(testutil::xor_triple());
  CHECK(conditional_interaction(xorred, m({0, 1}), m({2})) == doctest::Approx(1.0).epsilon(1e-12));

  // conditioning on an independent variable changes nothing
  const MeasureTable noisy(xor_with_noise());
  for (SubsetMask v : submasks(SubsetMask::full(3))) {
    if (v.empty()) continue;
    CHECK(conditional_interaction(noisy, v, m({3})) ==
          doctest::Approx(noisy.interaction_table()[v]).epsilon(1e-10));
  }

  CHECK_THROWS_AS(conditional_interaction(xorred, m({0, 1}), m({1})), std::invalid_argument);
  CHECK_THROWS_AS(conditional_interaction(xorred, SubsetMask::empty_set(), m({1})),
                  std::invalid_argument);
  CHECK_THROWS_AS(conditional_interaction(xorred, m({0}), SubsetMask::empty_set()),
                  std::invalid_argument);
}

TEST_CASE("single-conditioner expectation oracle equals the lattice difference") {
  for (unsigned n = 3; n <= 5; ++n) {
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      const JointDistribution d = testutil::random_binary_distribution(n, 20 * n + seed);
      const MeasureTable table(d);
      for (unsigned w = 0; w < n; ++w) {
        for (SubsetMask v : submasks(SubsetMask::full(n).without(w))) {
          if (v.empty()) continue;
          CHECK(conditional_interaction(table, v, SubsetMask::single(w)) ==
                doctest::Approx(conditional_expectation_oracle(d, v, SubsetMask::single(w)))
                    .epsilon(1e-10));
        }
      }
    }
  }
}

TEST_CASE("two conditioners: nesting the single-variable relation matches the difference") {
  const JointDistribution d = testutil::random_binary_distribution(4, 1234);
  const MeasureTable table(d);
  const SubsetMask v = m({0, 1});
  // I(v) - I(v u {2,3}) telescopes into two single-variable conditionals
  const double chained = conditional_expectation_oracle(d, v, m({2})) +
                         conditional_expectation_oracle(d, v | m({2}), m({3}));
  CHECK(conditional_interaction(table, v, m({2, 3})) ==
        doctest::Approx(chained).epsilon(1e-10));
}

TEST_CASE("joint expectation alone differs from the difference once |W| >= 2") {
  // the two-conditioner lattice difference is the alternating combination of
  // expectation conditionals, not the plain joint expectation; the parity
  // triple separates them by 2 bits
  const JointDistribution d = testutil::xor_triple();
  const MeasureTable table(d);
  const double difference = conditional_interaction(table, m({0}), m({1, 2}));
  const double joint_only = conditional_expectation_oracle(d, m({0}), m({1, 2}));
  CHECK(difference == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(joint_only == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(conditional_oracle_combination(d, m({0}), m({1, 2})) ==
        doctest::Approx(difference).epsilon(1e-12));
}

TEST_CASE("oracle combination matches the lattice difference for |W| up to 3") {
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    const JointDistribution d = testutil::random_binary_distribution(5, 9100 + seed);
    const MeasureTable table(d);
    for (SubsetMask w : submasks(SubsetMask::full(5))) {
      if (w.empty() || w.count() > 3) continue;
      for (SubsetMask v : submasks(SubsetMask::full(5) - w)) {
        if (v.empty() || v.count() > 2) continue;
        CHECK(conditional_interaction(table, v, w) ==
              doctest::Approx(conditional_oracle_combination(d, v, w)).epsilon(1e-10));
      }
    }
  }
}

TEST_CASE("chain decomposition reproduces the vertical expansion") {
  const MeasureTable table(testutil::xor_triple());
  const LatticeFunction& h = table.entropy_table();

  const ChainPath first({m({0}), m({0, 1}), m({0, 1, 2})});
  const ChainDecomposition dec1 = chain_decomposition(table, first);
  CHECK(dec1.anchor_entropy == doctest::Approx(h[m({0})]).epsilon(1e-12));
  REQUIRE(dec1.steps.size() == 2);
  CHECK(dec1.steps[0].value == doctest::Approx(delta(table, m({0}), 1).value).epsilon(1e-12));
  CHECK(dec1.steps[1].value == doctest::Approx(delta(table, m({0, 1}), 2).value).epsilon(1e-12));
  CHECK(dec1.total() == doctest::Approx(-1.0).epsilon(1e-12));

  const ChainPath second({m({1}), m({0, 1}), m({0, 1, 2})});
  CHECK(chain_decomposition(table, second).total() == doctest::Approx(-1.0).epsilon(1e-12));

  CHECK_THROWS_AS(chain_decomposition(table, ChainPath({m({0, 1}), m({0, 1, 2})})),
                  std::invalid_argument);
  CHECK_THROWS_AS(chain_decomposition(table, first.reversed()), std::invalid_argument);
}

TEST_CASE("every maximal chain sums to the full interaction on random pmfs") {
  for (unsigned n = 3; n <= 5; ++n) {
    const MeasureTable table(testutil::random_binary_distribution(n, 111 * n));
    const double full_value = table.interaction_table()[SubsetMask::full(n)];
    for (unsigned s = 0; s < n; ++s) {
      for (const ChainPath& chain : enumerate_chains(SubsetMask::single(s), SubsetMask::full(n))) {
        CHECK(chain_decomposition(table, chain).total() ==
              doctest::Approx(full_value).epsilon(1e-10));
      }
    }
  }
}

TEST_CASE("symmetrized delta classifies collective dependence") {
  const MeasureTable xorred(testutil::xor_triple());
  const SymmetrizedDelta sd = symmetrized_delta(xorred, SubsetMask::full(3));
  CHECK(sd.value == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(sd.collectively_dependent);
  REQUIRE(sd.factors.size() == 3);
  for (const DeltaValue& f : sd.factors) CHECK(f.value == doctest::Approx(-1.0).epsilon(1e-12));

  const MeasureTable independent(testutil::independent_fair_bits(3));
  const SymmetrizedDelta sd0 = symmetrized_delta(independent, SubsetMask::full(3));
  CHECK(sd0.value == doctest::Approx(0.0).epsilon(1e-12));
  CHECK_FALSE(sd0.collectively_dependent);

  const MeasureTable identical(testutil::identical_fair_bits());
  const SymmetrizedDelta sd_pair = symmetrized_delta(identical, SubsetMask::full(2));
  CHECK(sd_pair.value == doctest::Approx(0.0).epsilon(1e-12));
  CHECK_FALSE(sd_pair.collectively_dependent);

  CHECK_THROWS_AS(symmetrized_delta(xorred, m({0})), std::invalid_argument);
}

TEST_CASE("a factorizing bipartition forces the symmetrized delta to zero") {
  // identical bits (0,1) independent of a fair coin (2): the edge toward
  // variable 2 has Delta = 0, so the product collapses
  std::vector<std::pair<ValueTuple, double>> pmf;
  const JointDistribution bits = testutil::identical_fair_bits();
  for (const auto& [pair_tuple, p] : bits.support()) {
    for (std::uint32_t b = 0; b < 2; ++b) {
      ValueTuple t = pair_tuple;
      t.push_back(b);
      pmf.emplace_back(std::move(t), p / 2.0);
    }
  }
  const MeasureTable table(JointDistribution(testutil::binary_specs(3), std::move(pmf)));
  const SymmetrizedDelta sd = symmetrized_delta(table, SubsetMask::full(3));
  CHECK(sd.value == doctest::Approx(0.0).epsilon(1e-12));
  CHECK_FALSE(sd.collectively_dependent);
}

TEST_CASE("relabeling variables permutes the measure tables consistently") {
  const JointDistribution d = testutil::random_binary_distribution(4, 31415);
  // apply the permutation (0 1 2 3) -> (2 0 3 1): variable i moves to slot perm[i]
  const unsigned perm[4] = {2, 0, 3, 1};
  std::vector<std::pair<ValueTuple, double>> pmf;
  for (const auto& [tuple, p] : d.support()) {
    ValueTuple t(4);
    for (unsigned i = 0; i < 4; ++i) t[perm[i]] = tuple[i];
    pmf.emplace_back(std::move(t), p);
  }
  std::vector<VariableSpec> specs(4);
  for (unsigned i = 0; i < 4; ++i) specs[perm[i]] = d.variables()[i];
  const MeasureTable original(d);
  const MeasureTable permuted(JointDistribution(std::move(specs), std::move(pmf)));

  for (SubsetMask nu : submasks(SubsetMask::full(4))) {
    SubsetMask image;
    for (unsigned i : nu.indices()) image = image.with(perm[i]);
    CHECK(original.interaction_table()[nu] ==
          doctest::Approx(permuted.interaction_table()[image]).epsilon(1e-11));
    CHECK(original.multi_table()[nu] ==
          doctest::Approx(permuted.multi_table()[image]).epsilon(1e-11));
  }
}
