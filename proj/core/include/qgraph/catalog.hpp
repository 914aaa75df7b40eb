#pragma once

#include <string>
#include <vector>

#include "qgraph/graph.hpp"

namespace qgraph {

/// Built-in two-lead example graphs, all Neumann-Kirchhoff with unit edge
/// lengths:
///   D       two 2-edge arms in parallel between the lead vertices
///   H       two 3-edge arms in parallel (hexagon perimeter)
///   Dtilde  D plus the chord between the arm midpoints
///   Q       H plus the two straight chords a-c, b-d
///   X       H plus the two crossed chords a-d, b-c
/// Throws std::invalid_argument for unknown names.
ScatteringGraph build_named(const std::string& name);

/// Stable listing order: D, H, Dtilde, Q, X.
const std::vector<std::string>& catalog_names();

}  // namespace qgraph
