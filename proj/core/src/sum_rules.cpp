#include "infolattice/sum_rules.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace infolattice {

double edge_weight(const LatticeFunction& fn, SubsetMask tau, unsigned added) {
  if (tau.contains(added)) {
    throw std::invalid_argument("edge_weight: variable " + std::to_string(added) +
                                " already in " + tau.to_string());
  }
  fn.lattice().require_node(tau.with(added), "edge_weight");
  return fn[tau.with(added)] - fn[tau];
}

std::vector<WeightedEdge> WeightedLatticeGraph::edges() const {
  std::vector<WeightedEdge> out;
  out.reserve(base_.lattice().covering_edge_count());
  for (const CoveringEdge& edge : covering_edges(base_.lattice())) {
    out.push_back({edge, base_[edge.upper] - base_[edge.lower]});
  }
  return out;
}

double chain_sum(const LatticeFunction& fn, const ChainPath& chain) {
  fn.lattice().require_node(chain.top(), "chain_sum");
  const auto& nodes = chain.nodes();
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    sum += fn[nodes[i + 1]] - fn[nodes[i]];
  }
  return chain.direction() == ChainPath::Direction::ascending ? sum : -sum;
}

PathIndependenceResult verify_path_independence(const LatticeFunction& fn, SubsetMask a,
                                                SubsetMask b) {
  fn.lattice().require_node(b, "verify_path_independence");
  const std::vector<ChainPath> chains = enumerate_chains(a, b);
  PathIndependenceResult out;
  out.chain_count = chains.size();
  bool first = true;
  for (const ChainPath& chain : chains) {
    const double sum = chain_sum(fn, chain);
    if (first || sum < out.min_sum) out.min_sum = sum;
    if (first || sum > out.max_sum) out.max_sum = sum;
    first = false;
  }
  return out;
}

double SumRuleInstance::residual() const {
  return std::abs(chain_total + start_value - end_value);
}

std::string SumRuleInstance::rule_id() const {
  return start.to_string() + "->" + end.to_string();
}

double SumRuleReport::max_residual() const {
  double worst = 0.0;
  for (const SumRuleInstance& inst : instances) worst = std::max(worst, inst.residual());
  return worst;
}

SumRuleReport sum_rule_same_endpoint(const LatticeFunction& fn,
                                     const std::vector<SubsetMask>& starts, SubsetMask end) {
  fn.lattice().require_node(end, "sum_rule_same_endpoint");
  SumRuleReport report;
  report.instances.reserve(starts.size());
  for (SubsetMask start : starts) {
    if (!start.subset_of(end)) {
      throw std::invalid_argument("sum_rule_same_endpoint: start " + start.to_string() +
                                  " is not a subset of end " + end.to_string());
    }
    // Lexicographically first witness chain: add missing indices ascending.
    std::vector<SubsetMask> nodes{start};
    std::vector<unsigned> order;
    for (unsigned x : (end - start).indices()) {
      nodes.push_back(nodes.back().with(x));
      order.push_back(x);
    }
    const ChainPath chain(std::move(nodes));
    report.instances.push_back({start, end, std::move(order), chain_sum(fn, chain),
                                fn[start], fn[end]});
  }
  return report;
}

double multi_conditional(const LatticeFunction& interaction_fn, SubsetMask a, SubsetMask b) {
  interaction_fn.require_role(FunctionRole::interaction, "multi_conditional");
  interaction_fn.lattice().require_node(b, "multi_conditional");
  if (a.empty()) {
    throw std::invalid_argument("multi_conditional: a is empty");
  }
  if (!a.subset_of(b)) {
    throw std::invalid_argument("multi_conditional: " + a.to_string() + " and " + b.to_string() +
                                " are not comparable");
  }
  if ((b - a).count() < 2) {
    throw std::invalid_argument("multi_conditional: " + a.to_string() + " and " + b.to_string() +
                                " are adjacent or equal; need |b \\ a| >= 2");
  }
  return interaction_fn[a] - interaction_fn[b];
}

}  // namespace infolattice
