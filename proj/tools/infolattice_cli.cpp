// Command-line front end: ingest sample files into pmf files, print measure
// tables, run the identity verification suite, and export lattices.
//
// Exit codes: 0 success, 1 verification failure, 2 input/validation error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "infolattice/distribution.hpp"
#include "infolattice/dot_export.hpp"
#include "infolattice/io.hpp"
#include "infolattice/measures.hpp"
#include "infolattice/transforms.hpp"
#include "infolattice/verify.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_verification_failure = 1;
constexpr int exit_input_error = 2;

struct RunConfig {
  std::string input;
  std::string kind = "pmf";  // samples | pmf
  double log_base = 2.0;
  double tol_exact = 1e-12;
  double tol_dist = 1e-9;
  unsigned max_n = infolattice::default_dimension_cap;
  std::string format = "table";  // table | records | dot
  std::string out;               // empty -> stdout
};

void add_common_flags(CLI::App& cmd, RunConfig& config) {
  cmd.add_option("--log-base", config.log_base, "Logarithm base for entropies (default 2 = bits)")
      ->check(CLI::Range(1.0 + 1e-9, 1e9));
  cmd.add_option("--tol-exact", config.tol_exact, "Tolerance for transform-level identities")
      ->check(CLI::PositiveNumber);
  cmd.add_option("--tol-dist", config.tol_dist, "Tolerance for distribution-derived identities")
      ->check(CLI::PositiveNumber);
  cmd.add_option("--max-n", config.max_n, "Dimension cap (hard error above)")
      ->check(CLI::Range(1U, 31U));
  cmd.add_option("--out", config.out, "Output file (default stdout)");
}

void emit(const RunConfig& config, const std::string& text) {
  if (config.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(config.out, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open '" + config.out + "' for writing");
  }
  out << text;
}

int run_ingest(const RunConfig& config,
               const std::optional<std::vector<std::uint32_t>>& cardinalities,
               const std::string& out_path) {
  const infolattice::SampleData samples = infolattice::read_samples(config.input);
  const std::vector<infolattice::VariableSpec> specs =
      infolattice::resolve_specs(samples, cardinalities);
  const infolattice::JointDistribution d =
      infolattice::JointDistribution::from_samples(samples.rows, specs);
  infolattice::write_pmf(out_path, d);
  std::cout << "ingested " << samples.rows.size() << " records over " << specs.size()
            << " variables; support size " << d.support().size() << "\n";
  return exit_ok;
}

infolattice::JointDistribution load_input(const RunConfig& config) {
  if (config.kind == "samples") {
    const infolattice::SampleData samples = infolattice::read_samples(config.input);
    return infolattice::JointDistribution::from_samples(
        samples.rows, infolattice::resolve_specs(samples, std::nullopt));
  }
  return infolattice::read_pmf(config.input);
}

std::string render_measure_table(const infolattice::MeasureTable& table) {
  using infolattice::fixed9;
  const auto& lattice = table.lattice();
  std::string out = "subset\tH\tI\tM\tdelta_edges\n";
  for (infolattice::SubsetMask node : infolattice::submasks(lattice.full_set())) {
    out += lattice.label_of(node);
    out += '\t' + fixed9(table.entropy_table()[node]);
    out += '\t' + fixed9(table.interaction_table()[node]);
    out += '\t' + fixed9(table.multi_table()[node]);
    out += '\t';
    // descending edges: node minus each member, weighted by I-differences
    bool first = true;
    for (unsigned x : node.indices()) {
      if (!first) out += ' ';
      const double delta = table.interaction_table()[node] -
                           table.interaction_table()[node.without(x)];
      out += lattice.labels()[x] + ":" + fixed9(delta);
      first = false;
    }
    out += '\n';
  }
  return out;
}

std::string render_measure_records(const infolattice::MeasureTable& table) {
  return infolattice::export_lattice_json(table);
}

int run_table(const RunConfig& config) {
  const infolattice::JointDistribution d = load_input(config);
  const infolattice::MeasureTable table(d, config.log_base, config.max_n);
  if (config.format == "records") {
    emit(config, render_measure_records(table));
  } else {
    emit(config, render_measure_table(table));
  }
  return exit_ok;
}

int run_verify(const RunConfig& config) {
  const infolattice::JointDistribution d = load_input(config);
  infolattice::VerifyOptions options;
  options.tol_exact = config.tol_exact;
  options.tol_dist = config.tol_dist;
  options.log_base = config.log_base;
  options.dimension_cap = config.max_n;
  const infolattice::VerificationReport report = infolattice::run_identity_suite(d, options);
  emit(config, infolattice::format_report(report));
  return report.all_passed() ? exit_ok : exit_verification_failure;
}

int run_export(RunConfig& config, unsigned n) {
  std::string text;
  if (!config.input.empty()) {
    const infolattice::JointDistribution d = load_input(config);
    const infolattice::MeasureTable table(d, config.log_base, config.max_n);
    text = config.format == "dot" ? infolattice::export_lattice_dot(table)
                                  : infolattice::export_lattice_json(table);
  } else if (n > 0) {
    const infolattice::PowerSetLattice lattice(n, config.max_n);
    text = config.format == "dot" ? infolattice::export_lattice_dot(lattice)
                                  : infolattice::export_lattice_json(lattice);
  } else {
    throw std::runtime_error("export: provide -n DIMENSION or --input PMF");
  }
  emit(config, text);
  return exit_ok;
}

int run_cancellation(const RunConfig& config, unsigned n) {
  const infolattice::CancellationTable table = infolattice::cancellation_table(n);
  std::vector<std::string> labels;
  for (unsigned i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  emit(config, infolattice::format_cancellation_table(table, labels));
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Information measures and their dualities on power-set lattices"};
  app.require_subcommand(1);

  RunConfig config;

  auto* ingest = app.add_subcommand("ingest", "Estimate a pmf file from a CSV sample file");
  std::string ingest_out;
  std::vector<std::uint32_t> ingest_cards;
  ingest->add_option("--input", config.input, "Sample CSV file")->required();
  ingest->add_option("--out", ingest_out, "Output pmf file")->required();
  ingest->add_option("--cardinalities", ingest_cards,
                     "Per-variable state counts (default: inferred from data)");

  auto* tbl = app.add_subcommand("table", "Print H, I, M and edge deltas per subset");
  tbl->add_option("--input", config.input, "Input file")->required();
  tbl->add_option("--kind", config.kind, "Input kind: pmf | samples")
      ->check(CLI::IsMember({"pmf", "samples"}));
  tbl->add_option("--format", config.format, "Output format: table | records")
      ->check(CLI::IsMember({"table", "records"}));
  add_common_flags(*tbl, config);

  auto* verify = app.add_subcommand("verify", "Run the duality/sum-rule identity suite");
  verify->add_option("--input", config.input, "Input file")->required();
  verify->add_option("--kind", config.kind, "Input kind: pmf | samples")
      ->check(CLI::IsMember({"pmf", "samples"}));
  add_common_flags(*verify, config);

  auto* exp = app.add_subcommand("export", "Export the lattice as DOT or structured records");
  unsigned export_n = 0;
  exp->add_option("-n,--dimension", export_n, "Bare lattice dimension (no measures)");
  exp->add_option("--input", config.input, "pmf file to annotate the lattice with");
  exp->add_option("--kind", config.kind, "Input kind: pmf | samples")
      ->check(CLI::IsMember({"pmf", "samples"}));
  exp->add_option("--format", config.format, "Output format: dot | records")
      ->check(CLI::IsMember({"dot", "records"}));
  add_common_flags(*exp, config);

  auto* cancel = app.add_subcommand("cancellation", "Print the signed cancellation table");
  unsigned cancel_n = 0;
  cancel->add_option("-n,--dimension", cancel_n, "Number of variables (1..6)")->required();
  cancel->add_option("--out", config.out, "Output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (ingest->parsed()) {
      std::optional<std::vector<std::uint32_t>> cards;
      if (!ingest_cards.empty()) cards = ingest_cards;
      return run_ingest(config, cards, ingest_out);
    }
    if (tbl->parsed()) return run_table(config);
    if (verify->parsed()) return run_verify(config);
    if (exp->parsed()) {
      config.format = exp->count("--format") ? config.format : "dot";
      return run_export(config, export_n);
    }
    if (cancel->parsed()) return run_cancellation(config, cancel_n);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_input_error;
  }
  return exit_ok;
}
