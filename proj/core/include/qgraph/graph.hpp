#pragma once

#include <string>
#include <vector>

namespace qgraph {

struct Vertex {
    std::string label;
    double alpha = 0.0;  // delta coupling strength, 0 = Neumann-Kirchhoff
};

struct Edge {
    int u = 0;
    int v = 0;
    int mult = 1;  // edge length in units of the base length
};

/// Two-lead metric graph: undirected multigraph with integer edge-length
/// multipliers, a delta coupling at every vertex, and the scattering leads
/// stored as vertex attributes. Entrance and exit may sit on one vertex only
/// in degenerate test graphs. Self-loops are rejected; parallel edges are not.
class ScatteringGraph {
public:
    int add_vertex(double alpha = 0.0);
    int add_vertex(const std::string& label, double alpha = 0.0);
    int add_edge(int u, int v, int mult = 1);
    void set_leads(int entrance, int exit);

    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const Vertex& vertex(int i) const;
    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_leads() const { return entrance_ >= 0 && exit_ >= 0; }
    int entrance() const { return entrance_; }
    int exit() const { return exit_; }

    /// -1 when no vertex carries the label.
    int find_vertex(const std::string& label) const;

    /// Incident edge ends plus attached leads.
    int degree(int v) const;
    int lead_count(int v) const;
    bool all_nk() const;

private:
    void check_vertex(int v, const char* who) const;
    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;
    int entrance_ = -1;
    int exit_ = -1;
};

/// Report-only diagnostics; nothing here throws.
struct ValidationReport {
    bool connected = false;       // vertices-and-edges graph is one component
    int lead_count = 0;           // 2 when both leads are assigned
    std::vector<int> degrees;     // per vertex, edge ends + leads
    bool all_degree_three = false;

    /// The solver precondition: connected with both leads assigned.
    bool ok() const { return connected && lead_count == 2; }
};

ValidationReport validate(const ScatteringGraph& g);

}  // namespace qgraph
