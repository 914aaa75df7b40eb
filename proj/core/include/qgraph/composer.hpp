#pragma once

#include <string>
#include <vector>

#include "qgraph/graph.hpp"

namespace qgraph {

/// Series composition: a's exit lead and b's entrance lead are removed and
/// replaced by one connecting edge of unit length between those two vertices,
/// so both junction vertices keep their degree. Entrance = a's entrance,
/// exit = b's exit. Operands are copied, never mutated; their vertex labels
/// are prefixed "a." and "b." in the result.
ScatteringGraph series(const ScatteringGraph& a, const ScatteringGraph& b);

/// Parallel composition: two new Neumann-Kirchhoff hub vertices "in" and
/// "out" carry the new leads; each hub connects by unit edges to the operand
/// vertices that used to carry the corresponding lead. Hubs get degree 3 and
/// former lead vertices keep their degree.
ScatteringGraph parallel(const ScatteringGraph& a, const ScatteringGraph& b);

/// Composition expression tree. Series nodes take two or more children and
/// fold left; parallel nodes take exactly two.
struct Circuit {
    enum class Kind { leaf, series, parallel };
    Kind kind = Kind::leaf;
    ScatteringGraph graph;          // leaf payload
    std::vector<Circuit> children;  // series/parallel payload

    static Circuit leaf_of(ScatteringGraph g);
    static Circuit series_of(std::vector<Circuit> children);
    static Circuit parallel_of(Circuit a, Circuit b);
};

ScatteringGraph build_circuit(const Circuit& c);

/// Parses the circuit mini-grammar: `S(Q,X,Q)`, `P(P(Q,X),P(X,Q))`, a bare
/// catalog name, or `@path` referencing a graph-definition file (resolved at
/// parse time). Whitespace-insensitive; names are case-sensitive. Throws
/// std::invalid_argument on malformed input and propagates file errors.
Circuit parse_circuit(const std::string& text);

/// parse + build in one step.
ScatteringGraph build_circuit(const std::string& text);

}  // namespace qgraph
