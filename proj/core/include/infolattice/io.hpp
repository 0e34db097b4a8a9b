#pragma once

/// File formats consumed and produced by the command-line front end.
///
/// pmf file: JSON document with a "variables" list of {name, cardinality}
/// and a "mass" list of {tuple, p} records. The loader revalidates the
/// distribution, so a file whose mass is off by more than 1e-9 is rejected.
///
/// Sample file: CSV with a header row of variable names followed by one
/// comma-separated row of non-negative integer category values per record.

#include <optional>
#include <string>
#include <vector>

#include "infolattice/distribution.hpp"

namespace infolattice {

JointDistribution read_pmf(const std::string& path);
void write_pmf(const std::string& path, const JointDistribution& d);

/// In-memory forms, used by the file functions and directly by tests.
JointDistribution parse_pmf_json(const std::string& text, const std::string& origin = "<string>");
std::string pmf_to_json(const JointDistribution& d);

struct SampleData {
  std::vector<std::string> names;
  std::vector<ValueTuple> rows;
};

/// Parse errors name the offending 1-based line.
SampleData read_samples(const std::string& path);
SampleData parse_samples_csv(const std::string& text, const std::string& origin = "<string>");

/// Variable specs for a sample set: explicit cardinalities when given
/// (validating every value against them), otherwise max observed value + 1.
std::vector<VariableSpec> resolve_specs(const SampleData& samples,
                                        const std::optional<std::vector<std::uint32_t>>& cardinalities);

/// Fixed 9-decimal rendering used for every numeric value the tool prints;
/// negative zero normalizes to "0.000000000".
std::string fixed9(double value);

}  // namespace infolattice
