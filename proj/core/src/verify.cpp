#include "infolattice/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "infolattice/measures.hpp"
#include "infolattice/sum_rules.hpp"
#include "infolattice/transforms.hpp"

namespace infolattice {

namespace {

class FamilyAccumulator {
 public:
  FamilyAccumulator(std::string name, double tolerance) : result_{std::move(name), 0, 0.0, tolerance} {}

  void add(double residual) {
    ++result_.instances;
    result_.max_residual = std::max(result_.max_residual, std::abs(residual));
  }

  /// Max absolute difference over all nodes counts as one instance per node.
  void add_function_diff(const LatticeFunction& a, const LatticeFunction& b) {
    for (SubsetMask node : submasks(a.lattice().full_set())) add(a[node] - b[node]);
  }

  [[nodiscard]] FamilyResult finish() const { return result_; }

 private:
  FamilyResult result_;
};

/// Roundtrip of the H <-> I duality.
FamilyResult duality_roundtrip(const MeasureTable& table, const VerifyOptions& opt) {
  FamilyAccumulator fam("H-I-duality-roundtrip", opt.tol_exact);
  const LatticeFunction recovered = entropy_from_interaction(table.interaction_table());
  fam.add_function_diff(recovered, table.entropy_table());
  return fam.finish();
}

/// Appendix involution plus fast-vs-naive agreement of the signed transform.
FamilyResult signed_involution(const MeasureTable& table, const VerifyOptions& opt) {
  FamilyAccumulator fam("signed-involution", opt.tol_exact);
  const LatticeFunction* functions[] = {&table.entropy_table(), &table.interaction_table(),
                                        &table.multi_table()};
  for (const LatticeFunction* fn : functions) {
    for (SignConvention convention : {SignConvention::plain, SignConvention::plus_one}) {
      fam.add_function_diff(signed_transform(signed_transform(*fn, convention), convention), *fn);
    }
  }
  for (SignConvention convention : {SignConvention::plain, SignConvention::plus_one}) {
    fam.add_function_diff(signed_transform(table.entropy_table(), convention),
                          naive::signed_transform(table.entropy_table(), convention));
  }
  fam.add_function_diff(mobius_invert(zeta(table.entropy_table())), table.entropy_table());
  return fam.finish();
}

FamilyResult multi_dualities(const MeasureTable& table, const VerifyOptions& opt) {
  FamilyAccumulator fam("M-dualities", opt.tol_dist);
  for (SubsetMask nu : submasks(table.lattice().full_set())) {
    if (nu.count() < 2) continue;
    fam.add(multi_information(table.entropy_table(), nu) -
            multi_from_interaction(table.interaction_table(), nu));
    fam.add(table.interaction_table()[nu] - interaction_from_multi(table.multi_table(), nu));
  }
  return fam.finish();
}

FamilyResult delta_route_agreement(const MeasureTable& table, const VerifyOptions& opt) {
  FamilyAccumulator fam("delta-routes", opt.tol_dist);
  const SubsetMask full = table.lattice().full_set();
  for (unsigned x = 0; x < table.lattice().dimension(); ++x) {
    for (SubsetMask base : submasks(full.without(x))) {
      const DeltaRoutes routes = delta_routes(table, base, x);
      fam.add(routes.spread());
      if (base.count() >= 2) {
        fam.add(routes.interaction_difference - delta_from_multi(table.multi_table(), base, x));
      }
    }
  }
  return fam.finish();
}

FamilyResult delta_entropy_duality(const MeasureTable& table, const VerifyOptions& opt) {
  FamilyAccumulator fam("delta-H-duality", opt.tol_dist);
  const SubsetMask full = table.lattice().full_set();
  for (unsigned x = 0; x < table.lattice().dimension(); ++x) {
    for (SubsetMask base : submasks(full.without(x))) {
      if (base.empty()) continue;
      fam.add(delta_duality_check(table, base, x));
    }
  }
  return fam.finish();
}

FamilyResult chain_decompositions(const MeasureTable& table, const VerifyOptions& opt) {
  FamilyAccumulator fam("chain-decomposition", opt.tol_dist);
  const unsigned n = table.lattice().dimension();
  const SubsetMask full = table.lattice().full_set();
  const double full_interaction = table.interaction_table()[full];
  for (unsigned s = 0; s < n; ++s) {
    const SubsetMask singleton = SubsetMask::single(s);
    if (n - 1 <= max_chain_span) {
      for (const ChainPath& chain : enumerate_chains(singleton, full)) {
        fam.add(chain_decomposition(table, chain).total() - full_interaction);
      }
    } else {
      // dimension too large to enumerate; check the lexicographic chain only
      std::vector<SubsetMask> nodes{singleton};
      for (unsigned x : (full - singleton).indices()) nodes.push_back(nodes.back().with(x));
      fam.add(chain_decomposition(table, ChainPath(std::move(nodes))).total() - full_interaction);
    }
  }
  return fam.finish();
}

FamilyResult conditional_agreement(const MeasureTable& table, const VerifyOptions& opt) {
  FamilyAccumulator fam("conditional-interaction", opt.tol_dist);
  const SubsetMask full = table.lattice().full_set();
  for (SubsetMask w : submasks(full)) {
    if (w.empty() || w.count() > 3) continue;
    for (SubsetMask v : submasks(full - w)) {
      if (v.empty()) continue;
      if (w.count() >= 2 && v.count() > 3) continue;  // cost guard on joint slices
      const double lattice_difference = conditional_interaction(table, v, w);
      const double oracle =
          conditional_oracle_combination(table.distribution(), v, w, table.log_base());
      fam.add(lattice_difference - oracle);
    }
  }
  return fam.finish();
}

FamilyResult path_independence(const MeasureTable& table, const VerifyOptions& opt) {
  FamilyAccumulator fam("path-independence", opt.tol_dist);
  const unsigned span_cap = std::min(5U, table.lattice().dimension());
  const SubsetMask full = table.lattice().full_set();
  const LatticeFunction* functions[] = {&table.entropy_table(), &table.interaction_table(),
                                        &table.multi_table()};
  for (const LatticeFunction* fn : functions) {
    for (SubsetMask b : submasks(full)) {
      for (SubsetMask a : submasks(b)) {
        if ((b - a).count() > span_cap) continue;
        fam.add(verify_path_independence(*fn, a, b).spread());
      }
    }
  }
  return fam.finish();
}

FamilyResult same_endpoint_rules(const MeasureTable& table, const VerifyOptions& opt) {
  FamilyAccumulator fam("same-endpoint-sum-rules", opt.tol_exact);
  const SubsetMask full = table.lattice().full_set();
  const std::vector<SubsetMask> starts = submasks(full);
  const LatticeFunction* functions[] = {&table.entropy_table(), &table.interaction_table(),
                                        &table.multi_table()};
  for (const LatticeFunction* fn : functions) {
    const SumRuleReport report = sum_rule_same_endpoint(*fn, starts, full);
    for (const SumRuleInstance& inst : report.instances) fam.add(inst.residual());
  }
  return fam.finish();
}

}  // namespace

bool VerificationReport::all_passed() const {
  return std::all_of(families.begin(), families.end(),
                     [](const FamilyResult& f) { return f.passed(); });
}

VerificationReport run_identity_suite(const JointDistribution& d, const VerifyOptions& options) {
  const MeasureTable table(d, options.log_base, options.dimension_cap);
  VerificationReport report;
  report.families.push_back(duality_roundtrip(table, options));
  report.families.push_back(signed_involution(table, options));
  report.families.push_back(multi_dualities(table, options));
  report.families.push_back(delta_route_agreement(table, options));
  report.families.push_back(delta_entropy_duality(table, options));
  report.families.push_back(chain_decompositions(table, options));
  report.families.push_back(conditional_agreement(table, options));
  report.families.push_back(path_independence(table, options));
  report.families.push_back(same_endpoint_rules(table, options));
  return report;
}

std::string format_report(const VerificationReport& report) {
  std::string out;
  char line[160];
  std::snprintf(line, sizeof(line), "%-26s %10s %14s %10s  %s\n", "family", "instances",
                "max_residual", "tolerance", "status");
  out += line;
  for (const FamilyResult& fam : report.families) {
    std::snprintf(line, sizeof(line), "%-26s %10zu %14.3e %10.0e  %s\n", fam.name.c_str(),
                  fam.instances, fam.max_residual, fam.tolerance,
                  fam.passed() ? "PASS" : "FAIL");
    out += line;
  }
  return out;
}

}  // namespace infolattice
