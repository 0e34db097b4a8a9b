#pragma once

/// Zeta/Mobius and signed subset transforms on lattice functions.
///
/// Every transform has two implementations: the fast in-place
/// dimension-by-dimension O(n 2^n) version exposed here, and a naive O(3^n)
/// definition-level double loop under infolattice::naive that serves as the
/// oracle in tests and benchmarks. Inputs are never mutated; each transform
/// returns a fresh function.

#include <cstdint>
#include <string>
#include <vector>

#include "infolattice/lattice_function.hpp"

namespace infolattice {

/// Sign placement in the signed subset transform. `plain` weighs subsets by
/// (-1)^|tau|; `plus_one` by (-1)^(|tau|+1). Either way the transform is an
/// involution (the extra global sign squares away), and `plus_one` applied to
/// an entropy table yields the interaction table.
enum class SignConvention { plain, plus_one };

/// f(nu) = sum over tau subset of nu of g(tau), the sum-over-subsets
/// (zeta) transform. Role tag carries over as generic.
LatticeFunction zeta(const LatticeFunction& g);

/// g(nu) = sum over tau subset of nu of (-1)^(|tau|+|nu|) f(tau); exact
/// inverse of zeta.
LatticeFunction mobius_invert(const LatticeFunction& f);

/// f(nu) = sum over tau subset of nu of (-1)^|tau| h(tau) (or with |tau|+1 in
/// the exponent under SignConvention::plus_one). Self-inverse.
LatticeFunction signed_transform(const LatticeFunction& h,
                                 SignConvention convention = SignConvention::plain);

namespace naive {

/// Definition-level double loops, O(3^n); oracles for the fast versions.
LatticeFunction zeta(const LatticeFunction& g);
LatticeFunction mobius_invert(const LatticeFunction& f);
LatticeFunction signed_transform(const LatticeFunction& h,
                                 SignConvention convention = SignConvention::plain);

}  // namespace naive

/// Square matrix of signed term multiplicities produced by substituting the
/// signed transform into itself: entry (sigma, tau) is (-1)^(|tau|+|sigma|)
/// when sigma is a subset of tau, else 0. Exact integer arithmetic; every row
/// cancels to 0 except the full-set row, which sums to 1.
class CancellationTable {
 public:
  explicit CancellationTable(unsigned n);

  [[nodiscard]] unsigned dimension() const noexcept { return n_; }
  [[nodiscard]] std::size_t order() const noexcept { return std::size_t{1} << n_; }

  [[nodiscard]] int entry(SubsetMask sigma, SubsetMask tau) const;

  /// Row sums, indexed by sigma encoding.
  [[nodiscard]] std::vector<long long> row_sums() const;

 private:
  unsigned n_;
  std::vector<std::int8_t> entries_;  // row-major, order() x order()
};

/// Requires 1 <= n <= 6 (the table has 4^n cells).
CancellationTable cancellation_table(unsigned n);

/// Aligned text rendering with subsets as columns/rows and a rightmost Sums
/// column, mirroring how the double-sum breakout is usually displayed.
std::string format_cancellation_table(const CancellationTable& table,
                                      const std::vector<std::string>& labels);

}  // namespace infolattice
