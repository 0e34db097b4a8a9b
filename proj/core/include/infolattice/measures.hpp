#pragma once

/// The four information measures over a power-set lattice — joint entropy H,
/// interaction information I, multi-information (total correlation) M, and
/// the differential interaction information Delta — together with their
/// dualities and conditional forms. Every quantity with more than one
/// defining equation is computable by independent routes so the dualities can
/// be verified rather than assumed.
///
/// Sign convention throughout: I(nu) = sum over nonempty tau subset of nu of
/// (-1)^(|tau|+1) H(tau), so pairwise I is ordinary mutual information and
/// H({}) = I({}) = M({}) = 0.

#include <string>
#include <vector>

#include "infolattice/distribution.hpp"
#include "infolattice/lattice.hpp"
#include "infolattice/lattice_function.hpp"
#include "infolattice/subset_mask.hpp"

namespace infolattice {

/// Distribution-derived identities are asserted at this absolute tolerance;
/// pure transform identities use exact_tolerance.
inline constexpr double distribution_tolerance = 1e-9;
inline constexpr double exact_tolerance = 1e-12;

/// H, I and M tables over one lattice, built from one distribution.
class MeasureTable {
 public:
  explicit MeasureTable(JointDistribution distribution, double log_base = 2.0,
                        unsigned dimension_cap = default_dimension_cap);

  [[nodiscard]] const JointDistribution& distribution() const noexcept { return distribution_; }
  [[nodiscard]] const PowerSetLattice& lattice() const noexcept { return entropy_.lattice(); }
  [[nodiscard]] const LatticeFunction& entropy_table() const noexcept { return entropy_; }
  [[nodiscard]] const LatticeFunction& interaction_table() const noexcept { return interaction_; }
  [[nodiscard]] const LatticeFunction& multi_table() const noexcept { return multi_; }
  [[nodiscard]] double log_base() const noexcept { return log_base_; }

 private:
  JointDistribution distribution_;
  double log_base_;
  LatticeFunction entropy_;
  LatticeFunction interaction_;
  LatticeFunction multi_;
};

/// I(nu) = sum_{tau subset of nu} (-1)^(|tau|+1) H(tau) on every node.
/// Requires an entropy-tagged input with H({}) = 0.
LatticeFunction interaction_lattice(const LatticeFunction& entropy_fn);

/// H(nu) = sum_{tau subset of nu} (-1)^(|tau|+1) I(tau); exact inverse of
/// interaction_lattice (the two share one self-inverse transform).
LatticeFunction entropy_from_interaction(const LatticeFunction& interaction_fn);

/// M(nu) = sum_{i in nu} H({i}) - H(nu); zero on the empty set and singletons.
double multi_information(const LatticeFunction& entropy_fn, SubsetMask nu);

/// multi_information on every node as a multi-tagged function.
LatticeFunction multi_lattice(const LatticeFunction& entropy_fn);

/// M(nu) = sum_{tau subset of nu, |tau| >= 2} (-1)^|tau| I(tau). Returns 0 for
/// |nu| < 2, matching M's convention.
double multi_from_interaction(const LatticeFunction& interaction_fn, SubsetMask nu);

/// I(nu) = sum_{tau subset of nu, |tau| >= 2} (-1)^|tau| M(tau). Only valid
/// for |nu| >= 2 (singleton I values are not recoverable from M); smaller nu
/// is rejected.
double interaction_from_multi(const LatticeFunction& multi_fn, SubsetMask nu);

/// The change in interaction information when `added` joins `base`.
struct DeltaValue {
  SubsetMask base;
  unsigned added = 0;
  double value = 0.0;  // I(base u {added}) - I(base), in the table's log units
};

/// The same Delta evaluated through its three defining expansions.
struct DeltaRoutes {
  double interaction_difference = 0.0;  // I(base u {x}) - I(base)
  double signed_entropy_sum = 0.0;      // signed H-sum over subsets containing x
  double anchored_entropy_sum = 0.0;    // H({x}) plus signed H-sum anchored at x

  [[nodiscard]] double spread() const;
};

DeltaRoutes delta_routes(const MeasureTable& table, SubsetMask base, unsigned added);

/// Computes all three routes, requires their mutual agreement within
/// agreement_tolerance (they are equal in exact arithmetic; a wider spread
/// means corrupted inputs), and returns the interaction-difference value.
DeltaValue delta(const MeasureTable& table, SubsetMask base, unsigned added,
                 double agreement_tolerance = distribution_tolerance);

/// Delta through the multi-information duality:
/// sum over subsets of base u {added} that contain `added` and have >= 2
/// elements of (-1)^|tau| M(tau). Requires |base| >= 2 (below that the
/// M-duality cannot represent the singleton I terms).
double delta_from_multi(const LatticeFunction& multi_fn, SubsetMask base, unsigned added);

/// Residual of the Delta-H duality
///   H(base u {x}) - H({x}) = sum over nonempty tau subset of base of
///                            (-1)^|tau| Delta(tau; x),
/// with the sum over nonempty tau only. Contract: < distribution_tolerance on
/// valid distributions.
double delta_duality_check(const MeasureTable& table, SubsetMask base, unsigned added);

/// Conditional interaction information I(v | W) = I(v) - I(v u W), the
/// between-node difference on the interaction lattice. v and W must be
/// disjoint and nonempty.
double conditional_interaction(const MeasureTable& table, SubsetMask v, SubsetMask w);

/// Expectation route: sum over positive-mass value tuples w of W of
/// p(w) * I(v under the distribution conditioned on W = w). Built from
/// slice_condition and per-slice marginal entropies, independent of the
/// lattice-transform path.
double conditional_expectation_oracle(const JointDistribution& d, SubsetMask v, SubsetMask w,
                                      double log_base = 2.0);

/// Verification route for conditional_interaction: the alternating
/// combination sum over nonempty sigma subset of W of (-1)^(|sigma|+1) *
/// conditional_expectation_oracle(v, sigma). For |W| = 1 this is exactly the
/// expectation oracle; for larger W it is the combination that the lattice
/// difference provably equals (the plain expectation oracle alone equals the
/// difference only in the single-conditioner case).
double conditional_oracle_combination(const JointDistribution& d, SubsetMask v, SubsetMask w,
                                      double log_base = 2.0);

/// I(nu) telescoped along an ascending chain that starts at a singleton:
/// I(top) = H(bottom) + sum of per-step Delta values.
struct ChainDecomposition {
  SubsetMask anchor;            // the starting singleton
  double anchor_entropy = 0.0;  // H(anchor)
  std::vector<DeltaValue> steps;

  [[nodiscard]] double total() const;
};

ChainDecomposition chain_decomposition(const MeasureTable& table, const ChainPath& chain);

/// Product of Delta(nu \ {x}; x) over all x in nu: the collective-dependence
/// indicator. |nu| >= 2 required.
struct SymmetrizedDelta {
  SubsetMask subset;
  double value = 0.0;
  std::vector<DeltaValue> factors;
  /// True when every factor clears factor_tolerance in magnitude; a false
  /// verdict classifies the product as zero.
  bool collectively_dependent = false;
};

SymmetrizedDelta symmetrized_delta(const MeasureTable& table, SubsetMask nu,
                                   double factor_tolerance = distribution_tolerance);

}  // namespace infolattice
