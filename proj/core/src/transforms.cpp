#include "infolattice/transforms.hpp"

#include <algorithm>
#include <stdexcept>

namespace infolattice {

namespace {

using Encoding = SubsetMask::encoding_type;

/// In-place sum-over-subsets sweep, one dimension at a time.
void zeta_sweep(std::vector<double>& v, unsigned n) {
  const std::size_t size = std::size_t{1} << n;
  for (unsigned bit = 0; bit < n; ++bit) {
    const std::size_t step = std::size_t{1} << bit;
    for (std::size_t mask = 0; mask < size; ++mask) {
      if (mask & step) v[mask] += v[mask ^ step];
    }
  }
}

/// Inverse sweep: peels one dimension of subset sums at a time.
void mobius_sweep(std::vector<double>& v, unsigned n) {
  const std::size_t size = std::size_t{1} << n;
  for (unsigned bit = 0; bit < n; ++bit) {
    const std::size_t step = std::size_t{1} << bit;
    for (std::size_t mask = 0; mask < size; ++mask) {
      if (mask & step) v[mask] -= v[mask ^ step];
    }
  }
}

int parity_sign(Encoding mask) {
  return (std::popcount(mask) % 2 == 0) ? +1 : -1;
}

}  // namespace

LatticeFunction zeta(const LatticeFunction& g) {
  std::vector<double> v = g.values();
  zeta_sweep(v, g.lattice().dimension());
  return LatticeFunction(g.lattice(), std::move(v));
}

LatticeFunction mobius_invert(const LatticeFunction& f) {
  std::vector<double> v = f.values();
  mobius_sweep(v, f.lattice().dimension());
  return LatticeFunction(f.lattice(), std::move(v));
}

LatticeFunction signed_transform(const LatticeFunction& h, SignConvention convention) {
  // Weigh each node by (-1)^|tau|, then take subset sums; the plus-one
  // convention is a global sign flip on top.
  std::vector<double> v = h.values();
  for (std::size_t mask = 0; mask < v.size(); ++mask) {
    if (parity_sign(static_cast<Encoding>(mask)) < 0) v[mask] = -v[mask];
  }
  zeta_sweep(v, h.lattice().dimension());
  if (convention == SignConvention::plus_one) {
    for (double& x : v) x = -x;
  }
  return LatticeFunction(h.lattice(), std::move(v));
}

namespace naive {

LatticeFunction zeta(const LatticeFunction& g) {
  LatticeFunction f(g.lattice());
  for (SubsetMask nu : submasks(g.lattice().full_set())) {
    double sum = 0.0;
    for (SubsetMask tau : submasks(nu)) sum += g[tau];
    f.set(nu, sum);
  }
  return f;
}

LatticeFunction mobius_invert(const LatticeFunction& f) {
  LatticeFunction g(f.lattice());
  for (SubsetMask nu : submasks(f.lattice().full_set())) {
    double sum = 0.0;
    for (SubsetMask tau : submasks(nu)) sum += mobius(tau, nu) * f[tau];
    g.set(nu, sum);
  }
  return g;
}

LatticeFunction signed_transform(const LatticeFunction& h, SignConvention convention) {
  LatticeFunction f(h.lattice());
  for (SubsetMask nu : submasks(h.lattice().full_set())) {
    double sum = 0.0;
    for (SubsetMask tau : submasks(nu)) {
      const int sign = convention == SignConvention::plus_one ? sign_plus(tau)
                                                              : -sign_plus(tau);
      sum += sign * h[tau];
    }
    f.set(nu, sum);
  }
  return f;
}

}  // namespace naive

CancellationTable::CancellationTable(unsigned n) : n_(n) {
  if (n < 1 || n > 6) {
    throw std::invalid_argument("cancellation_table: dimension must be in [1, 6], got " +
                                std::to_string(n));
  }
  const std::size_t size = order();
  entries_.assign(size * size, 0);
  for (std::size_t sigma = 0; sigma < size; ++sigma) {
    for (std::size_t tau = 0; tau < size; ++tau) {
      if ((sigma & ~tau) == 0) {
        const int parity = (std::popcount(sigma) + std::popcount(tau)) % 2;
        entries_[sigma * size + tau] = parity == 0 ? 1 : -1;
      }
    }
  }
}

int CancellationTable::entry(SubsetMask sigma, SubsetMask tau) const {
  if (sigma.bits() >= order() || tau.bits() >= order()) {
    throw std::invalid_argument("CancellationTable: mask outside table");
  }
  return entries_[static_cast<std::size_t>(sigma.bits()) * order() + tau.bits()];
}

std::vector<long long> CancellationTable::row_sums() const {
  const std::size_t size = order();
  std::vector<long long> sums(size, 0);
  for (std::size_t sigma = 0; sigma < size; ++sigma) {
    for (std::size_t tau = 0; tau < size; ++tau) {
      sums[sigma] += entries_[sigma * size + tau];
    }
  }
  return sums;
}

CancellationTable cancellation_table(unsigned n) { return CancellationTable(n); }

namespace {

std::string subset_label(SubsetMask m, const std::vector<std::string>& labels) {
  if (m.empty()) return "0";
  std::string out;
  for (unsigned i : m.indices()) {
    if (!out.empty()) out += ',';
    out += labels[i];
  }
  return out;
}

/// Subsets ordered by descending cardinality, ascending encoding within a
/// cardinality, so the full set leads and the empty set trails.
std::vector<SubsetMask> display_order(unsigned n) {
  std::vector<SubsetMask> out = submasks(SubsetMask::full(n));
  std::stable_sort(out.begin(), out.end(), [](SubsetMask a, SubsetMask b) {
    if (a.count() != b.count()) return a.count() > b.count();
    return a.bits() < b.bits();
  });
  return out;
}

}  // namespace

std::string format_cancellation_table(const CancellationTable& table,
                                      const std::vector<std::string>& labels) {
  const unsigned n = table.dimension();
  if (labels.size() != n) {
    throw std::invalid_argument("format_cancellation_table: expected " + std::to_string(n) +
                                " labels");
  }
  const std::vector<SubsetMask> order = display_order(n);
  const std::vector<long long> sums = table.row_sums();

  std::vector<std::string> heads;
  std::size_t width = 4;  // fits "Sums"
  for (SubsetMask tau : order) {
    std::string head = subset_label(tau, labels);
    head += tau.count() % 2 == 0 ? " +" : " -";
    width = std::max(width, head.size());
    heads.push_back(std::move(head));
  }

  auto pad = [&](const std::string& cell) {
    std::string out = cell;
    out.resize(width, ' ');
    return out;
  };

  std::string out = pad("");
  for (const std::string& head : heads) out += "  " + pad(head);
  out += "  " + pad("Sums") + "\n";

  for (SubsetMask sigma : order) {
    out += pad(subset_label(sigma, labels));
    for (SubsetMask tau : order) {
      const int e = table.entry(sigma, tau);
      std::string cell;
      if (e != 0) cell = subset_label(sigma, labels) + (e > 0 ? " +" : " -");
      out += "  " + pad(cell);
    }
    out += "  " + pad(std::to_string(sums[sigma.bits()])) + "\n";
  }
  return out;
}

}  // namespace infolattice
