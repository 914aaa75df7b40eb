#include "qgraph/catalog.hpp"

#include <stdexcept>

namespace qgraph {

namespace {

ScatteringGraph build_d() {
    ScatteringGraph g;
    int L = g.add_vertex("L");
    int a = g.add_vertex("a");
    int c = g.add_vertex("c");
    int R = g.add_vertex("R");
    g.add_edge(L, a);
    g.add_edge(a, R);
    g.add_edge(L, c);
    g.add_edge(c, R);
    g.set_leads(L, R);
    return g;
}

/// Hexagon perimeter; the chord pairs distinguish Q from X.
ScatteringGraph build_h(bool straight_chords, bool crossed_chords) {
    ScatteringGraph g;
    int L = g.add_vertex("L");
    int a = g.add_vertex("a");
    int b = g.add_vertex("b");
    int R = g.add_vertex("R");
    int c = g.add_vertex("c");
    int d = g.add_vertex("d");
    g.add_edge(L, a);
    g.add_edge(a, b);
    g.add_edge(b, R);
    g.add_edge(L, c);
    g.add_edge(c, d);
    g.add_edge(d, R);
    if (straight_chords) {
        g.add_edge(a, c);
        g.add_edge(b, d);
    }
    if (crossed_chords) {
        g.add_edge(a, d);
        g.add_edge(b, c);
    }
    g.set_leads(L, R);
    return g;
}

}  // namespace

ScatteringGraph build_named(const std::string& name) {
    if (name == "D") return build_d();
    if (name == "H") return build_h(false, false);
    if (name == "Dtilde") {
        ScatteringGraph g = build_d();
        g.add_edge(g.find_vertex("a"), g.find_vertex("c"));
        return g;
    }
    if (name == "Q") return build_h(true, false);
    if (name == "X") return build_h(false, true);
    throw std::invalid_argument("build_named: unknown graph " + name);
}

const std::vector<std::string>& catalog_names() {
    static const std::vector<std::string> names{"D", "H", "Dtilde", "Q", "X"};
    return names;
}

}  // namespace qgraph
