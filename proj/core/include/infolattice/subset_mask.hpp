#pragma once

/// Compact identity of a variable subset: bit i set <=> variable i present.
/// Masks are the node keys of every lattice-wide table in this library, so
/// all tables are dense arrays indexed by the mask encoding.

#include <bit>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace infolattice {

class SubsetMask {
 public:
  using encoding_type = std::uint32_t;

  /// Hard ceiling imposed by the 32-bit encoding; the configurable dimension
  /// cap (default 20) is enforced by PowerSetLattice, not here.
  static constexpr unsigned max_dimension = 31;

  constexpr SubsetMask() noexcept = default;
  constexpr explicit SubsetMask(encoding_type bits) noexcept : bits_(bits) {}

  static constexpr SubsetMask empty_set() noexcept { return SubsetMask{0}; }

  static constexpr SubsetMask single(unsigned index) {
    check_index(index);
    return SubsetMask{encoding_type{1} << index};
  }

  /// The full set {0, ..., n-1}.
  static constexpr SubsetMask full(unsigned n) {
    if (n > max_dimension) {
      throw std::invalid_argument("SubsetMask: dimension exceeds encoding width");
    }
    return SubsetMask{n == 0 ? 0 : (encoding_type{1} << n) - 1};
  }

  static SubsetMask from_indices(const std::vector<unsigned>& indices) {
    SubsetMask m;
    for (unsigned i : indices) m = m.with(i);
    return m;
  }

  [[nodiscard]] constexpr encoding_type bits() const noexcept { return bits_; }
  [[nodiscard]] constexpr unsigned count() const noexcept { return static_cast<unsigned>(std::popcount(bits_)); }
  [[nodiscard]] constexpr bool empty() const noexcept { return bits_ == 0; }

  [[nodiscard]] constexpr bool contains(unsigned index) const {
    check_index(index);
    return (bits_ >> index) & 1U;
  }

  [[nodiscard]] constexpr bool subset_of(SubsetMask other) const noexcept {
    return (bits_ & ~other.bits_) == 0;
  }

  [[nodiscard]] constexpr bool disjoint_with(SubsetMask other) const noexcept {
    return (bits_ & other.bits_) == 0;
  }

  [[nodiscard]] constexpr SubsetMask with(unsigned index) const {
    check_index(index);
    return SubsetMask{bits_ | (encoding_type{1} << index)};
  }

  [[nodiscard]] constexpr SubsetMask without(unsigned index) const {
    check_index(index);
    return SubsetMask{bits_ & ~(encoding_type{1} << index)};
  }

  friend constexpr SubsetMask operator|(SubsetMask a, SubsetMask b) noexcept { return SubsetMask{a.bits_ | b.bits_}; }
  friend constexpr SubsetMask operator&(SubsetMask a, SubsetMask b) noexcept { return SubsetMask{a.bits_ & b.bits_}; }
  /// Set difference a \ b.
  friend constexpr SubsetMask operator-(SubsetMask a, SubsetMask b) noexcept { return SubsetMask{a.bits_ & ~b.bits_}; }

  friend constexpr bool operator==(SubsetMask, SubsetMask) noexcept = default;
  /// Orders by the canonical integer encoding (the deterministic order used
  /// throughout), not by inclusion.
  friend constexpr auto operator<=>(SubsetMask a, SubsetMask b) noexcept { return a.bits_ <=> b.bits_; }

  /// Member indices in ascending order.
  [[nodiscard]] std::vector<unsigned> indices() const {
    std::vector<unsigned> out;
    out.reserve(count());
    for (encoding_type rest = bits_; rest != 0; rest &= rest - 1) {
      out.push_back(static_cast<unsigned>(std::countr_zero(rest)));
    }
    return out;
  }

  /// Smallest member index; mask must be nonempty.
  [[nodiscard]] unsigned lowest_index() const {
    if (empty()) throw std::invalid_argument("SubsetMask: empty mask has no members");
    return static_cast<unsigned>(std::countr_zero(bits_));
  }

  /// "{0,2,3}" or "{}" — index-based; label-based rendering lives with the lattice.
  [[nodiscard]] std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for (unsigned i : indices()) {
      if (!first) out += ',';
      out += std::to_string(i);
      first = false;
    }
    out += '}';
    return out;
  }

 private:
  static constexpr void check_index(unsigned index) {
    if (index >= max_dimension) {
      throw std::invalid_argument("SubsetMask: variable index exceeds encoding width");
    }
  }

  encoding_type bits_ = 0;
};

}  // namespace infolattice
