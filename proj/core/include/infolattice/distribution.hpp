#pragma once

/// Discrete joint probability distributions over named categorical variables:
/// validation, marginalization, conditioning, plug-in estimation from sample
/// rows, and Shannon entropy over every variable subset.
///
/// Storage is sparse (only positive-mass tuples are kept), sorted by tuple for
/// deterministic iteration. Distributions are immutable after construction.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "infolattice/lattice.hpp"
#include "infolattice/lattice_function.hpp"
#include "infolattice/subset_mask.hpp"

namespace infolattice {

struct VariableSpec {
  std::string name;
  std::uint32_t cardinality = 0;  // number of categorical states, >= 1

  friend bool operator==(const VariableSpec&, const VariableSpec&) = default;
};

using ValueTuple = std::vector<std::uint32_t>;

/// Tolerance on total probability mass, both at validation and on file load.
inline constexpr double mass_tolerance = 1e-9;

struct ValidationReport {
  bool ok = true;
  std::string violation;  // names the first violated constraint when !ok
};

/// One variable-value assignment, used for conditioning.
struct Assignment {
  unsigned variable = 0;
  std::uint32_t value = 0;
};

class JointDistribution {
 public:
  /// Builds from explicit (tuple, probability) records; zero-mass records are
  /// dropped, duplicate tuples merge by summing. Structural errors (arity or
  /// range violations) throw; probabilistic soundness is checked by validate().
  JointDistribution(std::vector<VariableSpec> variables,
                    std::vector<std::pair<ValueTuple, double>> pmf);

  /// Maximum-likelihood plug-in estimate: pmf(t) = count(t) / N. Requires at
  /// least one row; every value must lie within its variable's cardinality.
  static JointDistribution from_samples(const std::vector<ValueTuple>& rows,
                                        std::vector<VariableSpec> specs);

  [[nodiscard]] const std::vector<VariableSpec>& variables() const noexcept { return variables_; }
  [[nodiscard]] unsigned variable_count() const noexcept {
    return static_cast<unsigned>(variables_.size());
  }
  /// Positive-mass records, sorted by tuple.
  [[nodiscard]] const std::vector<std::pair<ValueTuple, double>>& support() const noexcept {
    return pmf_;
  }

  [[nodiscard]] double probability_of(const ValueTuple& tuple) const;

  /// Confirms nonnegativity, unit mass (within mass_tolerance), tuple arity
  /// and value ranges. Returns rather than throws.
  [[nodiscard]] ValidationReport validate() const;

  /// Sums out all variables not in tau; tau must be nonempty.
  [[nodiscard]] JointDistribution marginal(SubsetMask tau) const;

  /// Renormalized distribution over the unassigned variables, given the
  /// assigned values. Conditioning on a zero-probability event throws.
  [[nodiscard]] JointDistribution slice_condition(const std::vector<Assignment>& assignments) const;

 private:
  std::vector<VariableSpec> variables_;
  std::vector<std::pair<ValueTuple, double>> pmf_;
};

/// Shannon entropy of d: -sum p log p over the support (0 log 0 = 0), in units
/// of the given log base. Base 2 (bits) is the default everywhere.
double entropy(const JointDistribution& d, double log_base = 2.0);

/// Entropy of every variable subset as a lattice function: H({}) = 0 and
/// H(tau) = entropy(marginal(tau)) otherwise. The distribution must be valid
/// and within the dimension cap.
LatticeFunction entropy_lattice(const JointDistribution& d, double log_base = 2.0,
                                unsigned dimension_cap = default_dimension_cap);

}  // namespace infolattice
