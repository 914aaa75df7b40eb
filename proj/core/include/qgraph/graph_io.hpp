#pragma once

#include <string>

#include "qgraph/graph.hpp"

namespace qgraph {

/// Graph-definition document:
///   {"vertices": [{"id": "L", "alpha": 0.0}, ...],
///    "edges":    [{"u": "L", "v": "a", "mult": 1}, ...],
///    "leads":    {"entrance": "L", "exit": "R"}}
/// Unknown top-level keys are ignored on input, so documents may carry extra
/// annotations and still round-trip.
std::string graph_to_json(const ScatteringGraph& g);
ScatteringGraph graph_from_json(const std::string& text);

/// Reads a graph-definition file; throws std::runtime_error with the path in
/// the message on IO or parse failure.
ScatteringGraph load_graph_file(const std::string& path);

}  // namespace qgraph
