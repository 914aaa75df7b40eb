#include "qgraph/graph.hpp"

#include <cmath>
#include <stdexcept>

namespace qgraph {

int ScatteringGraph::add_vertex(double alpha) {
    return add_vertex("v" + std::to_string(vertices_.size()), alpha);
}

int ScatteringGraph::add_vertex(const std::string& label, double alpha) {
    if (!std::isfinite(alpha)) throw std::invalid_argument("add_vertex: alpha must be finite");
    if (label.empty()) throw std::invalid_argument("add_vertex: empty label");
    if (find_vertex(label) >= 0) throw std::invalid_argument("add_vertex: duplicate label " + label);
    vertices_.push_back({label, alpha});
    return static_cast<int>(vertices_.size()) - 1;
}

int ScatteringGraph::add_edge(int u, int v, int mult) {
    check_vertex(u, "add_edge");
    check_vertex(v, "add_edge");
    if (u == v) throw std::invalid_argument("add_edge: self-loops are not supported");
    if (mult < 1) throw std::invalid_argument("add_edge: length multiplier must be positive");
    edges_.push_back({u, v, mult});
    return static_cast<int>(edges_.size()) - 1;
}

void ScatteringGraph::set_leads(int entrance, int exit) {
    check_vertex(entrance, "set_leads");
    check_vertex(exit, "set_leads");
    entrance_ = entrance;
    exit_ = exit;
}

const Vertex& ScatteringGraph::vertex(int i) const {
    check_vertex(i, "vertex");
    return vertices_[static_cast<size_t>(i)];
}

int ScatteringGraph::find_vertex(const std::string& label) const {
    for (size_t i = 0; i < vertices_.size(); ++i)
        if (vertices_[i].label == label) return static_cast<int>(i);
    return -1;
}

int ScatteringGraph::degree(int v) const {
    check_vertex(v, "degree");
    int d = lead_count(v);
    for (const auto& e : edges_) {
        if (e.u == v) ++d;
        if (e.v == v) ++d;
    }
    return d;
}

int ScatteringGraph::lead_count(int v) const {
    check_vertex(v, "lead_count");
    return (entrance_ == v ? 1 : 0) + (exit_ == v ? 1 : 0);
}

bool ScatteringGraph::all_nk() const {
    for (const auto& vx : vertices_)
        if (vx.alpha != 0.0) return false;
    return true;
}

void ScatteringGraph::check_vertex(int v, const char* who) const {
    if (v < 0 || v >= vertex_count())
        throw std::out_of_range(std::string(who) + ": unknown vertex " + std::to_string(v));
}

ValidationReport validate(const ScatteringGraph& g) {
    ValidationReport rep;
    const int n = g.vertex_count();
    rep.lead_count = (g.entrance() >= 0 ? 1 : 0) + (g.exit() >= 0 ? 1 : 0);
    rep.degrees.resize(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) rep.degrees[static_cast<size_t>(v)] = g.degree(v);
    rep.all_degree_three = n > 0;
    for (int d : rep.degrees)
        if (d != 3) rep.all_degree_three = false;
    if (n == 0) {
        rep.connected = false;
        return rep;
    }
    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (const auto& e : g.edges()) {
            int other = -1;
            if (e.u == v) other = e.v;
            else if (e.v == v) other = e.u;
            if (other >= 0 && !seen[static_cast<size_t>(other)]) {
                seen[static_cast<size_t>(other)] = 1;
                stack.push_back(other);
            }
        }
    }
    rep.connected = true;
    for (char s : seen)
        if (!s) rep.connected = false;
    return rep;
}

}  // namespace qgraph
