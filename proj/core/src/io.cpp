#include "infolattice/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace infolattice {

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open '" + path + "' for reading");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

JointDistribution parse_pmf_json(const std::string& text, const std::string& origin) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error(origin + ": not valid JSON: " + e.what());
  }
  try {
    std::vector<VariableSpec> specs;
    for (const auto& v : doc.at("variables")) {
      specs.push_back({v.at("name").get<std::string>(), v.at("cardinality").get<std::uint32_t>()});
    }
    std::vector<std::pair<ValueTuple, double>> pmf;
    for (const auto& rec : doc.at("mass")) {
      pmf.emplace_back(rec.at("tuple").get<ValueTuple>(), rec.at("p").get<double>());
    }
    JointDistribution d(std::move(specs), std::move(pmf));
    const ValidationReport report = d.validate();
    if (!report.ok) {
      throw std::runtime_error(origin + ": invalid pmf: " + report.violation);
    }
    return d;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(origin + ": malformed pmf document: " + e.what());
  }
}

JointDistribution read_pmf(const std::string& path) {
  return parse_pmf_json(slurp(path), path);
}

std::string pmf_to_json(const JointDistribution& d) {
  nlohmann::json doc;
  doc["variables"] = nlohmann::json::array();
  for (const VariableSpec& spec : d.variables()) {
    doc["variables"].push_back({{"name", spec.name}, {"cardinality", spec.cardinality}});
  }
  doc["mass"] = nlohmann::json::array();
  for (const auto& [tuple, p] : d.support()) {
    doc["mass"].push_back({{"tuple", tuple}, {"p", p}});
  }
  return doc.dump(2) + "\n";
}

void write_pmf(const std::string& path, const JointDistribution& d) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open '" + path + "' for writing");
  }
  out << pmf_to_json(d);
  if (!out) {
    throw std::runtime_error("failed writing '" + path + "'");
  }
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(field);
      field.clear();
    } else if (c != '\r') {
      field += c;
    }
  }
  fields.push_back(field);
  for (std::string& f : fields) {
    const auto begin = f.find_first_not_of(" \t");
    const auto end = f.find_last_not_of(" \t");
    f = begin == std::string::npos ? "" : f.substr(begin, end - begin + 1);
  }
  return fields;
}

}  // namespace

SampleData parse_samples_csv(const std::string& text, const std::string& origin) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;

  SampleData data;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    const std::vector<std::string> fields = split_csv_line(line);
    if (data.names.empty()) {
      for (const std::string& name : fields) {
        if (name.empty()) {
          throw std::runtime_error(origin + ":" + std::to_string(line_no) +
                                   ": empty variable name in header");
        }
      }
      data.names = fields;
      continue;
    }
    if (fields.size() != data.names.size()) {
      throw std::runtime_error(origin + ":" + std::to_string(line_no) + ": expected " +
                               std::to_string(data.names.size()) + " fields, got " +
                               std::to_string(fields.size()));
    }
    ValueTuple row;
    row.reserve(fields.size());
    for (const std::string& f : fields) {
      std::size_t used = 0;
      unsigned long value = 0;
      try {
        value = std::stoul(f, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != f.size() || f.empty() || f[0] == '-') {
        throw std::runtime_error(origin + ":" + std::to_string(line_no) +
                                 ": '" + f + "' is not a non-negative integer");
      }
      row.push_back(static_cast<std::uint32_t>(value));
    }
    data.rows.push_back(std::move(row));
  }
  if (data.names.empty()) {
    throw std::runtime_error(origin + ": empty sample file");
  }
  if (data.rows.empty()) {
    throw std::runtime_error(origin + ": no data rows");
  }
  return data;
}

SampleData read_samples(const std::string& path) {
  return parse_samples_csv(slurp(path), path);
}

std::vector<VariableSpec> resolve_specs(
    const SampleData& samples, const std::optional<std::vector<std::uint32_t>>& cardinalities) {
  std::vector<VariableSpec> specs;
  specs.reserve(samples.names.size());
  if (cardinalities) {
    if (cardinalities->size() != samples.names.size()) {
      throw std::runtime_error("expected " + std::to_string(samples.names.size()) +
                               " cardinalities, got " + std::to_string(cardinalities->size()));
    }
    for (std::size_t i = 0; i < samples.names.size(); ++i) {
      specs.push_back({samples.names[i], (*cardinalities)[i]});
    }
    return specs;
  }
  std::vector<std::uint32_t> inferred(samples.names.size(), 1);
  for (const ValueTuple& row : samples.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      inferred[i] = std::max(inferred[i], row[i] + 1);
    }
  }
  for (std::size_t i = 0; i < samples.names.size(); ++i) {
    specs.push_back({samples.names[i], inferred[i]});
  }
  return specs;
}

std::string fixed9(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.9f", value);
  std::string out = buffer;
  // collapse "-0.000000000" (negative zero or rounding dust) to the plain form
  if (out.find_first_not_of("-0.") == std::string::npos && out.front() == '-') {
    out.erase(0, 1);
  }
  return out;
}

}  // namespace infolattice
