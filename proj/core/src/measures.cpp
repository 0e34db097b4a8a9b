#include "infolattice/measures.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "infolattice/transforms.hpp"

namespace infolattice {

namespace {

void require_disjoint(SubsetMask v, SubsetMask w, const char* what) {
  if (!v.disjoint_with(w)) {
    throw std::invalid_argument(std::string(what) + ": " + v.to_string() + " and " +
                                w.to_string() + " overlap");
  }
}

void require_excludes(SubsetMask base, unsigned added, const char* what) {
  if (base.contains(added)) {
    throw std::invalid_argument(std::string(what) + ": added variable " + std::to_string(added) +
                                " already in base " + base.to_string());
  }
}

/// sum over tau subset of nu with |tau| >= 2 of (-1)^|tau| F(tau) — the
/// shared shape of the I<->M duality sums.
double pair_and_larger_signed_sum(const LatticeFunction& fn, SubsetMask nu) {
  fn.lattice().require_node(nu, "signed sum");
  double sum = 0.0;
  for (SubsetMask tau : submasks(nu)) {
    if (tau.count() < 2) continue;
    sum += -sign_plus(tau) * fn[tau];
  }
  return sum;
}

/// Interaction information of d restricted to nu, evaluated directly from
/// subset marginal entropies. Kept free of the transform machinery so the
/// conditional oracle stays an independent route.
double interaction_direct(const JointDistribution& d, SubsetMask nu, double log_base) {
  double sum = 0.0;
  for (SubsetMask tau : submasks(nu)) {
    if (tau.empty()) continue;
    sum += sign_plus(tau) * entropy(d.marginal(tau), log_base);
  }
  return sum;
}

}  // namespace

MeasureTable::MeasureTable(JointDistribution distribution, double log_base, unsigned dimension_cap)
    : distribution_(std::move(distribution)),
      log_base_(log_base),
      entropy_([&] {
        const ValidationReport report = distribution_.validate();
        if (!report.ok) {
          throw std::invalid_argument("MeasureTable: invalid distribution: " + report.violation);
        }
        return entropy_lattice(distribution_, log_base, dimension_cap);
      }()),
      interaction_(interaction_lattice(entropy_)),
      multi_(multi_lattice(entropy_)) {}

LatticeFunction interaction_lattice(const LatticeFunction& entropy_fn) {
  entropy_fn.require_role(FunctionRole::entropy, "interaction_lattice");
  if (entropy_fn[SubsetMask::empty_set()] != 0.0) {
    throw std::invalid_argument("interaction_lattice: entropy of the empty set must be 0");
  }
  return signed_transform(entropy_fn, SignConvention::plus_one)
      .retagged(FunctionRole::interaction);
}

LatticeFunction entropy_from_interaction(const LatticeFunction& interaction_fn) {
  interaction_fn.require_role(FunctionRole::interaction, "entropy_from_interaction");
  return signed_transform(interaction_fn, SignConvention::plus_one)
      .retagged(FunctionRole::entropy);
}

double multi_information(const LatticeFunction& entropy_fn, SubsetMask nu) {
  entropy_fn.require_role(FunctionRole::entropy, "multi_information");
  entropy_fn.lattice().require_node(nu, "multi_information");
  double singles = 0.0;
  for (unsigned i : nu.indices()) singles += entropy_fn[SubsetMask::single(i)];
  return singles - entropy_fn[nu];
}

LatticeFunction multi_lattice(const LatticeFunction& entropy_fn) {
  entropy_fn.require_role(FunctionRole::entropy, "multi_lattice");
  LatticeFunction m(entropy_fn.lattice(), FunctionRole::multi);
  for (SubsetMask nu : submasks(entropy_fn.lattice().full_set())) {
    m.set(nu, multi_information(entropy_fn, nu));
  }
  return m;
}

double multi_from_interaction(const LatticeFunction& interaction_fn, SubsetMask nu) {
  interaction_fn.require_role(FunctionRole::interaction, "multi_from_interaction");
  return pair_and_larger_signed_sum(interaction_fn, nu);
}

double interaction_from_multi(const LatticeFunction& multi_fn, SubsetMask nu) {
  multi_fn.require_role(FunctionRole::multi, "interaction_from_multi");
  if (nu.count() < 2) {
    throw std::invalid_argument("interaction_from_multi: needs |nu| >= 2, got " + nu.to_string());
  }
  return pair_and_larger_signed_sum(multi_fn, nu);
}

double DeltaRoutes::spread() const {
  const double lo = std::min({interaction_difference, signed_entropy_sum, anchored_entropy_sum});
  const double hi = std::max({interaction_difference, signed_entropy_sum, anchored_entropy_sum});
  return hi - lo;
}

DeltaRoutes delta_routes(const MeasureTable& table, SubsetMask base, unsigned added) {
  require_excludes(base, added, "delta");
  const LatticeFunction& h = table.entropy_table();
  const LatticeFunction& inter = table.interaction_table();
  const SubsetMask expanded = base.with(added);
  h.lattice().require_node(expanded, "delta");

  DeltaRoutes routes;
  routes.interaction_difference = inter[expanded] - inter[base];

  // Signed entropy sum over the subsets of base u {x} that contain x.
  double signed_sum = 0.0;
  for (SubsetMask tau : submasks(expanded)) {
    if (!tau.contains(added)) continue;
    signed_sum += sign_plus(tau) * h[tau];
  }
  routes.signed_entropy_sum = signed_sum;

  // H({x}) anchor plus the signed sum over nonempty subsets of base, each
  // joined with x.
  double anchored = h[SubsetMask::single(added)];
  for (SubsetMask tau : submasks(base)) {
    if (tau.empty()) continue;
    anchored += -sign_plus(tau) * h[tau.with(added)];
  }
  routes.anchored_entropy_sum = anchored;
  return routes;
}

DeltaValue delta(const MeasureTable& table, SubsetMask base, unsigned added,
                 double agreement_tolerance) {
  const DeltaRoutes routes = delta_routes(table, base, added);
  if (routes.spread() > agreement_tolerance) {
    throw std::logic_error("delta: routes disagree by " + std::to_string(routes.spread()) +
                           " at base " + base.to_string() + ", added " + std::to_string(added));
  }
  return {base, added, routes.interaction_difference};
}

double delta_from_multi(const LatticeFunction& multi_fn, SubsetMask base, unsigned added) {
  multi_fn.require_role(FunctionRole::multi, "delta_from_multi");
  require_excludes(base, added, "delta_from_multi");
  if (base.count() < 2) {
    throw std::invalid_argument("delta_from_multi: needs |base| >= 2, got " + base.to_string());
  }
  const SubsetMask expanded = base.with(added);
  multi_fn.lattice().require_node(expanded, "delta_from_multi");
  double sum = 0.0;
  for (SubsetMask tau : submasks(expanded)) {
    if (!tau.contains(added) || tau.count() < 2) continue;
    sum += -sign_plus(tau) * multi_fn[tau];
  }
  return sum;
}

double delta_duality_check(const MeasureTable& table, SubsetMask base, unsigned added) {
  if (base.empty()) {
    throw std::invalid_argument("delta_duality_check: base is empty");
  }
  require_excludes(base, added, "delta_duality_check");
  const LatticeFunction& h = table.entropy_table();
  const LatticeFunction& inter = table.interaction_table();
  h.lattice().require_node(base.with(added), "delta_duality_check");

  const double lhs = h[base.with(added)] - h[SubsetMask::single(added)];
  double rhs = 0.0;
  for (SubsetMask tau : submasks(base)) {
    if (tau.empty()) continue;  // the tau = {} term would break the identity
    rhs += -sign_plus(tau) * (inter[tau.with(added)] - inter[tau]);
  }
  return std::abs(lhs - rhs);
}

double conditional_interaction(const MeasureTable& table, SubsetMask v, SubsetMask w) {
  require_disjoint(v, w, "conditional_interaction");
  if (v.empty() || w.empty()) {
    throw std::invalid_argument("conditional_interaction: v and W must both be nonempty");
  }
  const LatticeFunction& inter = table.interaction_table();
  inter.lattice().require_node(v | w, "conditional_interaction");
  return inter[v] - inter[v | w];
}

double conditional_expectation_oracle(const JointDistribution& d, SubsetMask v, SubsetMask w,
                                      double log_base) {
  require_disjoint(v, w, "conditional_expectation_oracle");
  if (v.empty() || w.empty()) {
    throw std::invalid_argument("conditional_expectation_oracle: v and W must both be nonempty");
  }
  const std::vector<unsigned> w_indices = w.indices();
  const JointDistribution w_marginal = d.marginal(w);

  // Original v-indices renumber inside the sliced distribution: each index
  // drops by the number of assigned variables below it.
  SubsetMask v_in_slice;
  for (unsigned i : v.indices()) {
    unsigned below = 0;
    for (unsigned j : w_indices) {
      if (j < i) ++below;
    }
    v_in_slice = v_in_slice.with(i - below);
  }

  double total = 0.0;
  for (const auto& [w_tuple, p_w] : w_marginal.support()) {
    std::vector<Assignment> assignments;
    assignments.reserve(w_indices.size());
    for (std::size_t k = 0; k < w_indices.size(); ++k) {
      assignments.push_back({w_indices[k], w_tuple[k]});
    }
    const JointDistribution sliced = d.slice_condition(assignments);
    total += p_w * interaction_direct(sliced, v_in_slice, log_base);
  }
  return total;
}

double conditional_oracle_combination(const JointDistribution& d, SubsetMask v, SubsetMask w,
                                      double log_base) {
  require_disjoint(v, w, "conditional_oracle_combination");
  if (v.empty() || w.empty()) {
    throw std::invalid_argument("conditional_oracle_combination: v and W must both be nonempty");
  }
  double total = 0.0;
  for (SubsetMask sigma : submasks(w)) {
    if (sigma.empty()) continue;
    total += sign_plus(sigma) * conditional_expectation_oracle(d, v, sigma, log_base);
  }
  return total;
}

double ChainDecomposition::total() const {
  double sum = anchor_entropy;
  for (const DeltaValue& step : steps) sum += step.value;
  return sum;
}

ChainDecomposition chain_decomposition(const MeasureTable& table, const ChainPath& chain) {
  if (chain.direction() != ChainPath::Direction::ascending) {
    throw std::invalid_argument("chain_decomposition: chain must be ascending");
  }
  if (chain.bottom().count() != 1) {
    throw std::invalid_argument("chain_decomposition: chain must start at a singleton, got " +
                                chain.bottom().to_string());
  }
  const LatticeFunction& inter = table.interaction_table();
  inter.lattice().require_node(chain.top(), "chain_decomposition");

  ChainDecomposition out;
  out.anchor = chain.bottom();
  out.anchor_entropy = table.entropy_table()[chain.bottom()];
  const auto& nodes = chain.nodes();
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    out.steps.push_back({nodes[i], chain.added_at(i), inter[nodes[i + 1]] - inter[nodes[i]]});
  }
  return out;
}

SymmetrizedDelta symmetrized_delta(const MeasureTable& table, SubsetMask nu,
                                   double factor_tolerance) {
  if (nu.count() < 2) {
    throw std::invalid_argument("symmetrized_delta: needs |nu| >= 2, got " + nu.to_string());
  }
  table.lattice().require_node(nu, "symmetrized_delta");

  SymmetrizedDelta out;
  out.subset = nu;
  out.value = 1.0;
  out.collectively_dependent = true;
  for (unsigned x : nu.indices()) {
    DeltaValue factor = delta(table, nu.without(x), x);
    out.value *= factor.value;
    if (std::abs(factor.value) < factor_tolerance) out.collectively_dependent = false;
    out.factors.push_back(std::move(factor));
  }
  return out;
}

}  // namespace infolattice
