#include "infolattice/dot_export.hpp"

#include <stdexcept>

#include <json.hpp>

#include "infolattice/io.hpp"

namespace infolattice {

namespace {

void check_dot_dimension(const PowerSetLattice& lattice) {
  if (lattice.dimension() > max_dot_dimension) {
    throw std::invalid_argument("export_lattice_dot: dimension " +
                                std::to_string(lattice.dimension()) + " exceeds DOT cap of " +
                                std::to_string(max_dot_dimension));
  }
}

std::string sign_text(SubsetMask m) { return sign_plus(m) > 0 ? "+" : "-"; }

std::string dot_body(const PowerSetLattice& lattice, const MeasureTable* table) {
  std::string out = "digraph lattice {\n";
  out += "  rankdir=BT;\n";
  out += "  node [shape=box];\n";
  for (SubsetMask node : submasks(lattice.full_set())) {
    std::string label = lattice.label_of(node) + " (" + sign_text(node) + ")";
    if (table != nullptr) {
      label += "\\nH=" + fixed9(table->entropy_table()[node]);
      label += "\\nI=" + fixed9(table->interaction_table()[node]);
    }
    out += "  " + std::to_string(node.bits()) + " [label=\"" + label + "\"];\n";
  }
  for (const CoveringEdge& edge : covering_edges(lattice)) {
    out += "  " + std::to_string(edge.lower.bits()) + " -> " + std::to_string(edge.upper.bits());
    if (table != nullptr) {
      const double delta = table->interaction_table()[edge.upper] -
                           table->interaction_table()[edge.lower];
      out += " [label=\"" + fixed9(delta) + "\"]";
    }
    out += ";\n";
  }
  out += "}\n";
  return out;
}

nlohmann::json json_body(const PowerSetLattice& lattice, const MeasureTable* table) {
  nlohmann::json doc;
  doc["dimension"] = lattice.dimension();
  doc["labels"] = lattice.labels();
  doc["nodes"] = nlohmann::json::array();
  for (SubsetMask node : submasks(lattice.full_set())) {
    nlohmann::json rec;
    rec["id"] = node.bits();
    rec["members"] = node.indices();
    rec["label"] = lattice.label_of(node);
    rec["sign"] = sign_plus(node);
    if (table != nullptr) {
      rec["H"] = table->entropy_table()[node];
      rec["I"] = table->interaction_table()[node];
      rec["M"] = table->multi_table()[node];
    }
    doc["nodes"].push_back(std::move(rec));
  }
  doc["edges"] = nlohmann::json::array();
  for (const CoveringEdge& edge : covering_edges(lattice)) {
    nlohmann::json rec;
    rec["from"] = edge.lower.bits();
    rec["to"] = edge.upper.bits();
    rec["added"] = edge.added;
    if (table != nullptr) {
      rec["delta"] = table->interaction_table()[edge.upper] -
                     table->interaction_table()[edge.lower];
    }
    doc["edges"].push_back(std::move(rec));
  }
  return doc;
}

}  // namespace

std::string export_lattice_dot(const PowerSetLattice& lattice) {
  check_dot_dimension(lattice);
  return dot_body(lattice, nullptr);
}

std::string export_lattice_dot(const MeasureTable& table) {
  check_dot_dimension(table.lattice());
  return dot_body(table.lattice(), &table);
}

std::string export_lattice_json(const PowerSetLattice& lattice) {
  return json_body(lattice, nullptr).dump(2) + "\n";
}

std::string export_lattice_json(const MeasureTable& table) {
  return json_body(table.lattice(), &table).dump(2) + "\n";
}

}  // namespace infolattice
