#include "infolattice/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace infolattice {

namespace {

std::vector<std::string> default_labels(unsigned n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (unsigned i = 0; i < n; ++i) labels.push_back("X" + std::to_string(i + 1));
  return labels;
}

}  // namespace

PowerSetLattice::PowerSetLattice(unsigned n, unsigned dimension_cap)
    : PowerSetLattice(n, default_labels(n), dimension_cap) {}

PowerSetLattice::PowerSetLattice(unsigned n, std::vector<std::string> labels, unsigned dimension_cap)
    : n_(n), labels_(std::move(labels)) {
  if (n > SubsetMask::max_dimension || n > dimension_cap) {
    throw std::invalid_argument("PowerSetLattice: dimension " + std::to_string(n) +
                                " exceeds cap " + std::to_string(std::min<unsigned>(dimension_cap, SubsetMask::max_dimension)));
  }
  if (labels_.size() != n) {
    throw std::invalid_argument("PowerSetLattice: expected " + std::to_string(n) + " labels, got " +
                                std::to_string(labels_.size()));
  }
}

void PowerSetLattice::require_node(SubsetMask m, const char* what) const {
  if (!valid_node(m)) {
    throw std::invalid_argument(std::string(what) + ": mask " + m.to_string() +
                                " is not a node of a " + std::to_string(n_) + "-variable lattice");
  }
}

std::string PowerSetLattice::label_of(SubsetMask m) const {
  require_node(m, "label_of");
  std::string out = "{";
  bool first = true;
  for (unsigned i : m.indices()) {
    if (!first) out += ',';
    out += labels_[i];
    first = false;
  }
  out += '}';
  return out;
}

std::vector<SubsetMask> submasks(SubsetMask nu) {
  std::vector<SubsetMask> out;
  out.reserve(std::size_t{1} << nu.count());
  const auto bits = nu.bits();
  // Enumerate submasks of `bits` ascending: iterate all values and keep those
  // inside, via the standard complement-increment walk.
  SubsetMask::encoding_type sub = 0;
  while (true) {
    out.emplace_back(sub);
    if (sub == bits) break;
    sub = (sub - bits) & bits;  // next submask in ascending encoding order
  }
  return out;
}

int mobius(SubsetMask tau, SubsetMask nu) {
  if (!tau.subset_of(nu)) {
    throw std::invalid_argument("mobius: " + tau.to_string() + " is not a subset of " + nu.to_string());
  }
  return ((tau.count() + nu.count()) % 2 == 0) ? +1 : -1;
}

std::vector<CoveringEdge> covering_edges(const PowerSetLattice& lattice) {
  std::vector<CoveringEdge> out;
  out.reserve(lattice.covering_edge_count());
  const unsigned n = lattice.dimension();
  const auto nodes = std::size_t{1} << n;
  for (std::size_t node = 0; node < nodes; ++node) {
    const SubsetMask lower{static_cast<SubsetMask::encoding_type>(node)};
    for (unsigned x = 0; x < n; ++x) {
      if (!lower.contains(x)) out.push_back({lower, lower.with(x), x});
    }
  }
  return out;
}

std::vector<SubsetMask> up_set(const PowerSetLattice& lattice, SubsetMask node) {
  lattice.require_node(node, "up_set");
  const SubsetMask rest = lattice.full_set() - node;
  std::vector<SubsetMask> out;
  out.reserve(std::size_t{1} << rest.count());
  for (SubsetMask extra : submasks(rest)) out.push_back(node | extra);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SubsetMask> down_set(const PowerSetLattice& lattice, SubsetMask node) {
  lattice.require_node(node, "down_set");
  return submasks(node);
}

ChainPath::ChainPath(std::vector<SubsetMask> ascending_nodes, Direction direction)
    : nodes_(std::move(ascending_nodes)), direction_(direction) {
  if (nodes_.empty()) {
    throw std::invalid_argument("ChainPath: a chain has at least one node");
  }
  for (std::size_t i = 0; i + 1 < nodes_.size(); ++i) {
    const SubsetMask added = nodes_[i + 1] - nodes_[i];
    if (!nodes_[i].subset_of(nodes_[i + 1]) || added.count() != 1) {
      throw std::invalid_argument("ChainPath: " + nodes_[i].to_string() + " -> " +
                                  nodes_[i + 1].to_string() + " is not a covering step");
    }
  }
}

ChainPath ChainPath::reversed() const {
  return ChainPath(nodes_, direction_ == Direction::ascending ? Direction::descending
                                                              : Direction::ascending);
}

unsigned ChainPath::added_at(std::size_t i) const {
  if (i + 1 >= nodes_.size()) {
    throw std::out_of_range("ChainPath: step index out of range");
  }
  return (nodes_[i + 1] - nodes_[i]).lowest_index();
}

std::vector<ChainPath> enumerate_chains(SubsetMask a, SubsetMask b) {
  if (!a.subset_of(b)) {
    throw std::invalid_argument("enumerate_chains: endpoints " + a.to_string() + ", " +
                                b.to_string() + " are not comparable");
  }
  const SubsetMask span = b - a;
  if (span.count() > max_chain_span) {
    throw std::invalid_argument("enumerate_chains: span of " + std::to_string(span.count()) +
                                " variables exceeds cap of " + std::to_string(max_chain_span));
  }
  const std::vector<unsigned> free_indices = span.indices();

  std::vector<ChainPath> out;
  std::vector<SubsetMask> nodes{a};
  std::vector<bool> used(free_indices.size(), false);

  // Depth-first over orderings of the added indices; trying indices in
  // ascending order yields lexicographic chain order.
  auto recurse = [&](auto&& self) -> void {
    if (nodes.size() == free_indices.size() + 1) {
      out.emplace_back(nodes);
      return;
    }
    for (std::size_t k = 0; k < free_indices.size(); ++k) {
      if (used[k]) continue;
      used[k] = true;
      nodes.push_back(nodes.back().with(free_indices[k]));
      self(self);
      nodes.pop_back();
      used[k] = false;
    }
  };
  recurse(recurse);
  return out;
}

ConditionProjection::ConditionProjection(const PowerSetLattice& source, SubsetMask cond_set)
    : source_n_(source.dimension()),
      cond_(cond_set),
      kept_((source.full_set() - cond_set).indices()),
      target_([&] {
        source.require_node(cond_set, "condition_projection");
        if (cond_set.empty()) {
          throw std::invalid_argument("condition_projection: conditioning set is empty");
        }
        std::vector<std::string> labels;
        for (unsigned i : (source.full_set() - cond_set).indices()) {
          labels.push_back(source.labels()[i]);
        }
        return PowerSetLattice(source.dimension() - cond_set.count(), std::move(labels));
      }()) {}

SubsetMask ConditionProjection::project(SubsetMask sigma) const {
  if (!cond_.subset_of(sigma) || !sigma.subset_of(SubsetMask::full(source_n_))) {
    throw std::invalid_argument("condition_projection: " + sigma.to_string() +
                                " is not in the filter above " + cond_.to_string());
  }
  SubsetMask out;
  for (unsigned t = 0; t < kept_.size(); ++t) {
    if (sigma.contains(kept_[t])) out = out.with(t);
  }
  return out;
}

SubsetMask ConditionProjection::lift(SubsetMask tau) const {
  target_.require_node(tau, "condition_projection lift");
  SubsetMask out = cond_;
  for (unsigned t : tau.indices()) out = out.with(kept_[t]);
  return out;
}

std::vector<SubsetMask> ConditionProjection::filter_nodes() const {
  std::vector<SubsetMask> out;
  out.reserve(target_.node_count());
  for (SubsetMask tau : submasks(target_.full_set())) out.push_back(lift(tau));
  std::sort(out.begin(), out.end());
  return out;
}

ConditionProjection condition_projection(const PowerSetLattice& lattice, SubsetMask cond_set) {
  return ConditionProjection(lattice, cond_set);
}

}  // namespace infolattice
