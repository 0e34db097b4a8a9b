#pragma once

/// The power-set lattice of a variable set, ordered by inclusion: covering
/// edges, maximal chains, principal filters/ideals, the alternating sign and
/// Mobius functions, and the conditioning projection that collapses dimension.
///
/// Everything here is a pure function over immutable values; concurrent reads
/// are safe.

#include <cstdint>
#include <string>
#include <vector>

#include "infolattice/subset_mask.hpp"

namespace infolattice {

/// Default ceiling on the lattice dimension. 2^n nodes are materialized for
/// every lattice-wide table, so growth past ~10^6 nodes must fail loudly
/// rather than thrash; callers may raise the cap explicitly.
inline constexpr unsigned default_dimension_cap = 20;

class PowerSetLattice {
 public:
  /// Labels default to X1..Xn when not supplied.
  explicit PowerSetLattice(unsigned n, unsigned dimension_cap = default_dimension_cap);
  PowerSetLattice(unsigned n, std::vector<std::string> labels,
                  unsigned dimension_cap = default_dimension_cap);

  [[nodiscard]] unsigned dimension() const noexcept { return n_; }
  [[nodiscard]] std::size_t node_count() const noexcept { return std::size_t{1} << n_; }
  [[nodiscard]] std::size_t covering_edge_count() const noexcept {
    return n_ == 0 ? 0 : std::size_t{n_} << (n_ - 1);
  }
  [[nodiscard]] const std::vector<std::string>& labels() const noexcept { return labels_; }

  [[nodiscard]] SubsetMask full_set() const noexcept { return SubsetMask::full(n_); }

  [[nodiscard]] bool valid_node(SubsetMask m) const noexcept {
    return m.subset_of(full_set());
  }

  /// Throws std::invalid_argument when m is not a node of this lattice.
  void require_node(SubsetMask m, const char* what) const;

  /// "{X1,X3}" or "{}" using the variable labels.
  [[nodiscard]] std::string label_of(SubsetMask m) const;

  friend bool operator==(const PowerSetLattice& a, const PowerSetLattice& b) noexcept {
    return a.n_ == b.n_ && a.labels_ == b.labels_;
  }

 private:
  unsigned n_;
  std::vector<std::string> labels_;
};

/// One Hasse-diagram edge tau -> tau u {added}, directed upward.
struct CoveringEdge {
  SubsetMask lower;
  SubsetMask upper;
  unsigned added;

  friend bool operator==(const CoveringEdge&, const CoveringEdge&) = default;
};

/// All 2^|nu| subsets of nu, ascending by canonical integer encoding.
std::vector<SubsetMask> submasks(SubsetMask nu);

/// The alternating weight (-1)^(|tau|+1): +1 for odd cardinality, -1 for even
/// (the empty set gets -1).
constexpr int sign_plus(SubsetMask tau) noexcept {
  return (tau.count() % 2 == 1) ? +1 : -1;
}

/// Mobius function of the inclusion order in its symmetric factored form,
/// (-1)^(|tau|+|nu|); requires tau subset of nu.
int mobius(SubsetMask tau, SubsetMask nu);

/// Every covering pair of the lattice, ordered by (lower encoding, added index).
std::vector<CoveringEdge> covering_edges(const PowerSetLattice& lattice);

/// Principal filter {sigma : node subset of sigma} within the lattice.
std::vector<SubsetMask> up_set(const PowerSetLattice& lattice, SubsetMask node);

/// Principal ideal {sigma : sigma subset of node}.
std::vector<SubsetMask> down_set(const PowerSetLattice& lattice, SubsetMask node);

/// A saturated chain: consecutive nodes differ by exactly one added variable.
/// Nodes are stored bottom-up; the direction flag records the traversal sense.
class ChainPath {
 public:
  enum class Direction { ascending, descending };

  /// Validates the covering relation between consecutive nodes.
  explicit ChainPath(std::vector<SubsetMask> ascending_nodes,
                     Direction direction = Direction::ascending);

  [[nodiscard]] const std::vector<SubsetMask>& nodes() const noexcept { return nodes_; }
  [[nodiscard]] Direction direction() const noexcept { return direction_; }
  [[nodiscard]] std::size_t step_count() const noexcept { return nodes_.size() - 1; }

  [[nodiscard]] SubsetMask bottom() const noexcept { return nodes_.front(); }
  [[nodiscard]] SubsetMask top() const noexcept { return nodes_.back(); }

  /// First/last node in traversal order (bottom/top for ascending chains).
  [[nodiscard]] SubsetMask start() const noexcept {
    return direction_ == Direction::ascending ? bottom() : top();
  }
  [[nodiscard]] SubsetMask end() const noexcept {
    return direction_ == Direction::ascending ? top() : bottom();
  }

  [[nodiscard]] ChainPath reversed() const;

  /// Index added at ascending step i (between nodes[i] and nodes[i+1]).
  [[nodiscard]] unsigned added_at(std::size_t i) const;

 private:
  std::vector<SubsetMask> nodes_;
  Direction direction_;
};

/// Guard on enumerate_chains: |b \ a|! chains are materialized, so the span
/// is capped at 7 (5040 chains).
inline constexpr unsigned max_chain_span = 7;

/// All saturated chains from a to b (requires a subset of b and span <= 7),
/// in lexicographic order of their added-index sequences.
std::vector<ChainPath> enumerate_chains(SubsetMask a, SubsetMask b);

/// Order isomorphism between the principal filter above cond_set and the
/// power set of the remaining variables: sigma |-> sigma \ cond_set, with the
/// remaining indices renumbered compactly. Covering edges map to covering
/// edges in both directions.
class ConditionProjection {
 public:
  /// cond_set must be a nonempty node of source (the identity map is not a
  /// projection).
  ConditionProjection(const PowerSetLattice& source, SubsetMask cond_set);

  [[nodiscard]] const PowerSetLattice& target() const noexcept { return target_; }
  [[nodiscard]] SubsetMask condition_set() const noexcept { return cond_; }

  /// Filter member -> target node. Rejects sigma outside the filter.
  [[nodiscard]] SubsetMask project(SubsetMask sigma) const;

  /// Target node -> filter member (inverse of project).
  [[nodiscard]] SubsetMask lift(SubsetMask tau) const;

  /// The domain {sigma : cond_set subset of sigma}, ascending by encoding.
  [[nodiscard]] std::vector<SubsetMask> filter_nodes() const;

 private:
  unsigned source_n_;
  SubsetMask cond_;
  std::vector<unsigned> kept_;  // remaining source indices, ascending
  PowerSetLattice target_;
};

ConditionProjection condition_projection(const PowerSetLattice& lattice, SubsetMask cond_set);

}  // namespace infolattice
