#pragma once

/// The lattice as an edge-weighted directed graph over any lattice function:
/// covering-edge weights are adjacent-node differences, so every chain sum
/// telescopes and depends only on its endpoints. Provides both kinds of sum
/// rules (shared endpoints; shared final endpoint with the start value folded
/// in) and the multi-conditional difference between comparable nodes.

#include <cstddef>
#include <string>
#include <vector>

#include "infolattice/lattice.hpp"
#include "infolattice/lattice_function.hpp"
#include "infolattice/subset_mask.hpp"

namespace infolattice {

/// w(tau -> tau u {x}) = F(tau u {x}) - F(tau). When F is the interaction
/// table this is Delta(tau; x), the negated single-variable conditional.
double edge_weight(const LatticeFunction& fn, SubsetMask tau, unsigned added);

struct WeightedEdge {
  CoveringEdge edge;
  double weight = 0.0;
};

/// View of a lattice function as a weighted digraph. Weights are always
/// recomputed from the base function, never stored, so they cannot drift.
class WeightedLatticeGraph {
 public:
  explicit WeightedLatticeGraph(LatticeFunction base) : base_(std::move(base)) {}

  [[nodiscard]] const LatticeFunction& base() const noexcept { return base_; }
  [[nodiscard]] double weight(SubsetMask tau, unsigned added) const {
    return edge_weight(base_, tau, added);
  }
  /// Every covering edge with its weight, in covering_edges order.
  [[nodiscard]] std::vector<WeightedEdge> edges() const;

 private:
  LatticeFunction base_;
};

/// Signed sum of edge weights along the chain, subtracting when traversing
/// against the lattice direction. Telescopes to F(end) - F(start) in
/// traversal order.
double chain_sum(const LatticeFunction& fn, const ChainPath& chain);

struct PathIndependenceResult {
  std::size_t chain_count = 0;
  double min_sum = 0.0;
  double max_sum = 0.0;

  [[nodiscard]] double spread() const { return max_sum - min_sum; }
};

/// Enumerates every chain from a to b (requires a subset of b, span <= 7)
/// and reports the spread of the chain sums. Contract: spread below 1e-9 for
/// any function (the sums are equal up to rounding).
PathIndependenceResult verify_path_independence(const LatticeFunction& fn, SubsetMask a,
                                                SubsetMask b);

/// One same-final-endpoint rule: chain_sum(start -> end) + F(start) = F(end).
struct SumRuleInstance {
  SubsetMask start;
  SubsetMask end;
  std::vector<unsigned> added_order;  // the witness chain, by added index
  double chain_total = 0.0;
  double start_value = 0.0;
  double end_value = 0.0;

  [[nodiscard]] double residual() const;
  [[nodiscard]] std::string rule_id() const;
};

struct SumRuleReport {
  std::vector<SumRuleInstance> instances;

  [[nodiscard]] double max_residual() const;
};

/// Builds the rule instance for every start (each must be a subset of end),
/// using the lexicographically first chain as witness.
SumRuleReport sum_rule_same_endpoint(const LatticeFunction& fn,
                                     const std::vector<SubsetMask>& starts, SubsetMask end);

/// I(a | b \ a) = I(a) - I(b) for comparable but non-adjacent nodes
/// (a proper subset of b, a nonempty, |b \ a| >= 2). Incomparable or adjacent
/// pairs are rejected: adjacent differences are single-variable conditionals,
/// and incomparable differences have no conditional reading.
double multi_conditional(const LatticeFunction& interaction_fn, SubsetMask a, SubsetMask b);

}  // namespace infolattice
