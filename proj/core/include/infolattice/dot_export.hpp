#pragma once

/// Graphviz and structured (JSON) exports of a power-set lattice: one node
/// per subset labeled with its member names and alternating sign, one edge
/// per covering pair directed upward. The measure-table overloads annotate
/// nodes with H and I and edges with their Delta weights.

#include <string>

#include "infolattice/lattice.hpp"
#include "infolattice/measures.hpp"

namespace infolattice {

/// DOT output is capped at this dimension for readability.
inline constexpr unsigned max_dot_dimension = 10;

std::string export_lattice_dot(const PowerSetLattice& lattice);
std::string export_lattice_dot(const MeasureTable& table);

std::string export_lattice_json(const PowerSetLattice& lattice);
std::string export_lattice_json(const MeasureTable& table);

}  // namespace infolattice
