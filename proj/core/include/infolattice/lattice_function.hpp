#pragma once

/// A total real-valued map on the nodes of a power-set lattice, stored as a
/// dense array indexed by the mask encoding. Houses entropy, interaction and
/// multi-information tables as well as generic functions fed to transforms.

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "infolattice/lattice.hpp"
#include "infolattice/subset_mask.hpp"

namespace infolattice {

enum class FunctionRole { generic, entropy, interaction, multi };

[[nodiscard]] constexpr const char* role_name(FunctionRole role) noexcept {
  switch (role) {
    case FunctionRole::entropy: return "entropy";
    case FunctionRole::interaction: return "interaction";
    case FunctionRole::multi: return "multi";
    case FunctionRole::generic: break;
  }
  return "generic";
}

class LatticeFunction {
 public:
  /// Zero-initialized function over every node.
  explicit LatticeFunction(PowerSetLattice lattice, FunctionRole role = FunctionRole::generic)
      : lattice_(std::move(lattice)), values_(lattice_.node_count(), 0.0), role_(role) {}

  /// Adopts one value per node (indexed by mask encoding); all values must be
  /// finite.
  LatticeFunction(PowerSetLattice lattice, std::vector<double> values,
                  FunctionRole role = FunctionRole::generic)
      : lattice_(std::move(lattice)), values_(std::move(values)), role_(role) {
    if (values_.size() != lattice_.node_count()) {
      throw std::invalid_argument("LatticeFunction: expected " + std::to_string(lattice_.node_count()) +
                                  " values, got " + std::to_string(values_.size()));
    }
    for (double v : values_) {
      if (!std::isfinite(v)) throw std::invalid_argument("LatticeFunction: non-finite value");
    }
  }

  [[nodiscard]] const PowerSetLattice& lattice() const noexcept { return lattice_; }
  [[nodiscard]] FunctionRole role() const noexcept { return role_; }
  [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
  [[nodiscard]] const std::vector<double>& values() const noexcept { return values_; }

  [[nodiscard]] double at(SubsetMask m) const {
    lattice_.require_node(m, "LatticeFunction");
    return values_[m.bits()];
  }
  [[nodiscard]] double operator[](SubsetMask m) const { return values_[m.bits()]; }

  void set(SubsetMask m, double value) {
    lattice_.require_node(m, "LatticeFunction");
    if (!std::isfinite(value)) throw std::invalid_argument("LatticeFunction: non-finite value");
    values_[m.bits()] = value;
  }

  /// Same values under a different role tag.
  [[nodiscard]] LatticeFunction retagged(FunctionRole role) const {
    return LatticeFunction(lattice_, values_, role);
  }

  void require_role(FunctionRole expected, const char* what) const {
    if (role_ != expected) {
      throw std::invalid_argument(std::string(what) + ": expected a " +
                                  role_name(expected) + "-tagged function, got " + role_name(role_));
    }
  }

 private:
  PowerSetLattice lattice_;
  std::vector<double> values_;
  FunctionRole role_;
};

}  // namespace infolattice
