#include "infolattice/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace infolattice {

namespace {

void check_specs(const std::vector<VariableSpec>& specs) {
  for (std::size_t i = 0; i < specs.size(); ++i) {
    if (specs[i].cardinality < 1) {
      throw std::invalid_argument("JointDistribution: variable '" + specs[i].name +
                                  "' has cardinality 0");
    }
    for (std::size_t j = i + 1; j < specs.size(); ++j) {
      if (specs[i].name == specs[j].name) {
        throw std::invalid_argument("JointDistribution: duplicate variable name '" +
                                    specs[i].name + "'");
      }
    }
  }
}

void check_tuple(const ValueTuple& t, const std::vector<VariableSpec>& specs) {
  if (t.size() != specs.size()) {
    throw std::invalid_argument("JointDistribution: tuple arity " + std::to_string(t.size()) +
                                " does not match " + std::to_string(specs.size()) + " variables");
  }
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] >= specs[i].cardinality) {
      throw std::out_of_range("JointDistribution: value " + std::to_string(t[i]) +
                              " out of range for variable '" + specs[i].name + "' (cardinality " +
                              std::to_string(specs[i].cardinality) + ")");
    }
  }
}

}  // namespace

JointDistribution::JointDistribution(std::vector<VariableSpec> variables,
                                     std::vector<std::pair<ValueTuple, double>> pmf)
    : variables_(std::move(variables)) {
  check_specs(variables_);
  std::map<ValueTuple, double> merged;
  for (auto& [tuple, p] : pmf) {
    check_tuple(tuple, variables_);
    if (p != 0.0) merged[tuple] += p;
  }
  pmf_.assign(merged.begin(), merged.end());
}

JointDistribution JointDistribution::from_samples(const std::vector<ValueTuple>& rows,
                                                  std::vector<VariableSpec> specs) {
  if (rows.empty()) {
    throw std::invalid_argument("from_samples: no sample rows");
  }
  check_specs(specs);
  std::map<ValueTuple, std::size_t> counts;
  for (const ValueTuple& row : rows) {
    check_tuple(row, specs);
    ++counts[row];
  }
  std::vector<std::pair<ValueTuple, double>> pmf;
  pmf.reserve(counts.size());
  const double n = static_cast<double>(rows.size());
  for (const auto& [tuple, count] : counts) {
    pmf.emplace_back(tuple, static_cast<double>(count) / n);
  }
  return JointDistribution(std::move(specs), std::move(pmf));
}

double JointDistribution::probability_of(const ValueTuple& tuple) const {
  check_tuple(tuple, variables_);
  const auto it = std::lower_bound(pmf_.begin(), pmf_.end(), tuple,
                                   [](const auto& rec, const ValueTuple& t) { return rec.first < t; });
  return (it != pmf_.end() && it->first == tuple) ? it->second : 0.0;
}

ValidationReport JointDistribution::validate() const {
  for (const auto& [tuple, p] : pmf_) {
    if (p < 0.0) {
      return {false, "negative probability " + std::to_string(p) + " at tuple index"};
    }
    if (!std::isfinite(p)) {
      return {false, "non-finite probability"};
    }
  }
  double mass = 0.0;
  for (const auto& rec : pmf_) mass += rec.second;
  if (std::abs(mass - 1.0) > mass_tolerance) {
    return {false, "total mass " + std::to_string(mass) + " deviates from 1 by more than 1e-9"};
  }
  return {};
}

JointDistribution JointDistribution::marginal(SubsetMask tau) const {
  if (tau.empty()) {
    throw std::invalid_argument("marginal: subset is empty");
  }
  if (!tau.subset_of(SubsetMask::full(variable_count()))) {
    throw std::invalid_argument("marginal: subset " + tau.to_string() + " outside the " +
                                std::to_string(variable_count()) + " variables");
  }
  const std::vector<unsigned> keep = tau.indices();
  std::vector<VariableSpec> specs;
  specs.reserve(keep.size());
  for (unsigned i : keep) specs.push_back(variables_[i]);

  std::map<ValueTuple, double> merged;
  ValueTuple key(keep.size());
  for (const auto& [tuple, p] : pmf_) {
    for (std::size_t k = 0; k < keep.size(); ++k) key[k] = tuple[keep[k]];
    merged[key] += p;
  }
  std::vector<std::pair<ValueTuple, double>> pmf(merged.begin(), merged.end());
  return JointDistribution(std::move(specs), std::move(pmf));
}

JointDistribution JointDistribution::slice_condition(const std::vector<Assignment>& assignments) const {
  SubsetMask assigned;
  std::vector<std::uint32_t> wanted(variable_count(), 0);
  for (const Assignment& a : assignments) {
    if (a.variable >= variable_count()) {
      throw std::invalid_argument("slice_condition: variable index " + std::to_string(a.variable) +
                                  " out of range");
    }
    if (a.value >= variables_[a.variable].cardinality) {
      throw std::out_of_range("slice_condition: value " + std::to_string(a.value) +
                              " out of range for variable '" + variables_[a.variable].name + "'");
    }
    if (assigned.contains(a.variable)) {
      throw std::invalid_argument("slice_condition: variable assigned twice");
    }
    assigned = assigned.with(a.variable);
    wanted[a.variable] = a.value;
  }

  const std::vector<unsigned> keep = (SubsetMask::full(variable_count()) - assigned).indices();
  std::vector<VariableSpec> specs;
  for (unsigned i : keep) specs.push_back(variables_[i]);

  double mass = 0.0;
  std::map<ValueTuple, double> merged;
  ValueTuple key(keep.size());
  for (const auto& [tuple, p] : pmf_) {
    bool match = true;
    for (unsigned v : assigned.indices()) {
      if (tuple[v] != wanted[v]) {
        match = false;
        break;
      }
    }
    if (!match) continue;
    mass += p;
    for (std::size_t k = 0; k < keep.size(); ++k) key[k] = tuple[keep[k]];
    merged[key] += p;
  }
  if (mass <= 0.0) {
    throw std::invalid_argument("slice_condition: conditioning event has zero probability");
  }
  std::vector<std::pair<ValueTuple, double>> pmf;
  pmf.reserve(merged.size());
  for (const auto& [tuple, p] : merged) pmf.emplace_back(tuple, p / mass);
  return JointDistribution(std::move(specs), std::move(pmf));
}

double entropy(const JointDistribution& d, double log_base) {
  if (!(log_base > 1.0)) {
    throw std::invalid_argument("entropy: log base must exceed 1");
  }
  const double log_scale = std::log(log_base);
  double h = 0.0;
  for (const auto& [tuple, p] : d.support()) {
    if (p > 0.0) h -= p * std::log(p);
  }
  h /= log_scale;
  return h < 0.0 ? 0.0 : h;  // clamp -0.0 and rounding dust from point masses
}

LatticeFunction entropy_lattice(const JointDistribution& d, double log_base,
                                unsigned dimension_cap) {
  const unsigned n = d.variable_count();
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const VariableSpec& spec : d.variables()) labels.push_back(spec.name);
  PowerSetLattice lattice(n, std::move(labels), dimension_cap);

  LatticeFunction h(lattice, FunctionRole::entropy);
  for (SubsetMask tau : submasks(lattice.full_set())) {
    if (tau.empty()) continue;  // H({}) = 0 by convention
    h.set(tau, entropy(d.marginal(tau), log_base));
  }
  return h;
}

}  // namespace infolattice
