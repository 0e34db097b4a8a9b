#pragma once

/// The identity suite behind the `verify` command: every duality, chain and
/// sum-rule identity the library implements, evaluated over a concrete
/// distribution, one result line per identity family. All instance sets are
/// deterministic, so a report is byte-identical across runs on equal input.

#include <cstddef>
#include <string>
#include <vector>

#include "infolattice/distribution.hpp"
#include "infolattice/lattice.hpp"

namespace infolattice {

struct VerifyOptions {
  double tol_exact = 1e-12;  // transform-level identities
  double tol_dist = 1e-9;    // distribution-derived identities
  double log_base = 2.0;
  unsigned dimension_cap = default_dimension_cap;
};

struct FamilyResult {
  std::string name;
  std::size_t instances = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;

  [[nodiscard]] bool passed() const { return max_residual < tolerance; }
};

struct VerificationReport {
  std::vector<FamilyResult> families;

  [[nodiscard]] bool all_passed() const;
};

/// Runs every identity family against the distribution. Families with
/// combinatorial instance sets carry per-family caps (chain spans <= 7,
/// conditioning sets |W| <= 3, path spans <= 5) so the suite stays tractable
/// as the dimension grows; instance counts in the report reflect what ran.
VerificationReport run_identity_suite(const JointDistribution& d,
                                      const VerifyOptions& options = {});

/// One aligned line per family: name, instances, max residual, tolerance,
/// PASS/FAIL.
std::string format_report(const VerificationReport& report);

}  // namespace infolattice
