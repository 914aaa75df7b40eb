#include "qgraph/solver.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <queue>
#include <stdexcept>

#include "qgraph/linear_solve.hpp"

namespace qgraph {

namespace {

void require_solvable(const ScatteringGraph& g) {
    ValidationReport rep = validate(g);
    if (!rep.ok())
        throw std::invalid_argument("solver: graph must be connected with entrance and exit leads");
}

}  // namespace

HalfEdgeLayout build_half_edge_layout(const ScatteringGraph& g) {
    const int n = g.vertex_count();
    // Incidence in insertion order, then edges renumbered by BFS discovery.
    std::vector<std::vector<int>> incident(static_cast<size_t>(n));
    for (int e = 0; e < g.edge_count(); ++e) {
        incident[static_cast<size_t>(g.edges()[static_cast<size_t>(e)].u)].push_back(e);
        incident[static_cast<size_t>(g.edges()[static_cast<size_t>(e)].v)].push_back(e);
    }
    std::vector<char> vertex_seen(static_cast<size_t>(n), 0);
    std::vector<char> edge_seen(static_cast<size_t>(g.edge_count()), 0);
    std::vector<int> edge_order;
    edge_order.reserve(static_cast<size_t>(g.edge_count()));
    std::queue<int> frontier;
    frontier.push(g.entrance());
    vertex_seen[static_cast<size_t>(g.entrance())] = 1;
    while (!frontier.empty()) {
        const int v = frontier.front();
        frontier.pop();
        for (int e : incident[static_cast<size_t>(v)]) {
            if (edge_seen[static_cast<size_t>(e)]) continue;
            edge_seen[static_cast<size_t>(e)] = 1;
            edge_order.push_back(e);
            const auto& edge = g.edges()[static_cast<size_t>(e)];
            const int other = edge.u == v ? edge.v : edge.u;
            if (!vertex_seen[static_cast<size_t>(other)]) {
                vertex_seen[static_cast<size_t>(other)] = 1;
                frontier.push(other);
            }
        }
    }
    HalfEdgeLayout layout;
    layout.half_edges.reserve(static_cast<size_t>(2 * g.edge_count()));
    layout.out.resize(static_cast<size_t>(n));
    for (int e : edge_order) {
        const auto& edge = g.edges()[static_cast<size_t>(e)];
        const int fwd = static_cast<int>(layout.half_edges.size());
        layout.half_edges.push_back({edge.u, edge.v, edge.mult, fwd + 1});
        layout.half_edges.push_back({edge.v, edge.u, edge.mult, fwd});
        layout.out[static_cast<size_t>(edge.u)].push_back(fwd);
        layout.out[static_cast<size_t>(edge.v)].push_back(fwd + 1);
    }
    return layout;
}

NumericPathSystem assemble_numeric(const ScatteringGraph& g, std::complex<double> k) {
    require_solvable(g);
    NumericPathSystem sys;
    sys.layout = build_half_edge_layout(g);
    sys.z = std::exp(std::complex<double>(0.0, 1.0) * k);
    std::vector<AmplitudePair> amp(static_cast<size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v)
        amp[static_cast<size_t>(v)] = delta_amplitudes(g.degree(v), g.vertex(v).alpha, k);
    sys.entrance_amplitudes = amp[static_cast<size_t>(g.entrance())];

    const int n = static_cast<int>(sys.layout.half_edges.size());
    sys.matrix.assign(static_cast<size_t>(n),
                      std::vector<std::complex<double>>(static_cast<size_t>(n), {0.0, 0.0}));
    sys.rhs_exit.assign(static_cast<size_t>(n), {0.0, 0.0});
    sys.rhs_entrance.assign(static_cast<size_t>(n), {0.0, 0.0});
    for (int h = 0; h < n; ++h) {
        const HalfEdge& he = sys.layout.half_edges[static_cast<size_t>(h)];
        const int v = he.head;
        const AmplitudePair& a = amp[static_cast<size_t>(v)];
        const std::complex<double> zm = std::pow(sys.z, he.mult);
        auto& row = sys.matrix[static_cast<size_t>(h)];
        row[static_cast<size_t>(h)] += 1.0;
        row[static_cast<size_t>(he.reverse)] -= zm * a.r;
        for (int h2 : sys.layout.out[static_cast<size_t>(v)]) {
            if (h2 == he.reverse) continue;
            row[static_cast<size_t>(h2)] -= zm * a.t;
        }
        if (v == g.exit()) sys.rhs_exit[static_cast<size_t>(h)] = zm * a.t;
        if (v == g.entrance()) sys.rhs_entrance[static_cast<size_t>(h)] = zm * a.t;
    }
    return sys;
}

ExactPathSystem assemble_exact(const ScatteringGraph& g) {
    require_solvable(g);
    if (!g.all_nk())
        throw std::invalid_argument("assemble_exact: closed form requires alpha = 0 everywhere");
    ExactPathSystem sys;
    sys.layout = build_half_edge_layout(g);
    std::vector<RationalAmplitudePair> amp(static_cast<size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v)
        amp[static_cast<size_t>(v)] = nk_amplitudes(g.degree(v));
    sys.entrance_amplitudes = amp[static_cast<size_t>(g.entrance())];

    const int n = static_cast<int>(sys.layout.half_edges.size());
    sys.matrix.assign(static_cast<size_t>(n), std::vector<Polynomial>(static_cast<size_t>(n)));
    sys.rhs_exit.assign(static_cast<size_t>(n), Polynomial());
    sys.rhs_entrance.assign(static_cast<size_t>(n), Polynomial());
    for (int h = 0; h < n; ++h) {
        const HalfEdge& he = sys.layout.half_edges[static_cast<size_t>(h)];
        const int v = he.head;
        const RationalAmplitudePair& a = amp[static_cast<size_t>(v)];
        auto& row = sys.matrix[static_cast<size_t>(h)];
        row[static_cast<size_t>(h)] += Polynomial(1);
        row[static_cast<size_t>(he.reverse)] -= Polynomial::monomial(a.r, he.mult);
        for (int h2 : sys.layout.out[static_cast<size_t>(v)]) {
            if (h2 == he.reverse) continue;
            row[static_cast<size_t>(h2)] -= Polynomial::monomial(a.t, he.mult);
        }
        if (v == g.exit()) sys.rhs_exit[static_cast<size_t>(h)] = Polynomial::monomial(a.t, he.mult);
        if (v == g.entrance()) sys.rhs_entrance[static_cast<size_t>(h)] = Polynomial::monomial(a.t, he.mult);
    }
    return sys;
}

ScatteringAmplitudes scattering(const ScatteringGraph& g, std::complex<double> k) {
    NumericPathSystem sys = assemble_numeric(g, k);
    const int n = static_cast<int>(sys.layout.half_edges.size());
    const AmplitudePair& in = sys.entrance_amplitudes;
    ScatteringAmplitudes result{{0.0, 0.0}, in.r};
    if (g.entrance() == g.exit()) result.transmission += in.t;
    if (n == 0) return result;

    Eigen::MatrixXcd a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = sys.matrix[static_cast<size_t>(i)][static_cast<size_t>(j)];
    Eigen::MatrixXcd b(n, 2);
    for (int i = 0; i < n; ++i) {
        b(i, 0) = sys.rhs_exit[static_cast<size_t>(i)];
        b(i, 1) = sys.rhs_entrance[static_cast<size_t>(i)];
    }
    Eigen::PartialPivLU<Eigen::MatrixXcd> lu(a);
    Eigen::MatrixXcd x = lu.solve(b);
    // Backward-error residual: near resonance poles the solution is huge and
    // a bound relative to ||b|| alone is unreachable in double precision.
    const double scale = std::max(b.cwiseAbs().maxCoeff(),
                                  a.cwiseAbs().rowwise().sum().maxCoeff() * x.cwiseAbs().maxCoeff());
    const double residual = (a * x - b).cwiseAbs().maxCoeff();
    if (!(residual <= 1e-10 * std::max(scale, 1e-300)))
        throw std::runtime_error("scattering: residual bound violated");

    for (int h : sys.layout.out[static_cast<size_t>(g.entrance())]) {
        result.transmission += in.t * x(h, 0);
        result.reflection += in.t * x(h, 1);
    }
    return result;
}

std::complex<double> transmission(const ScatteringGraph& g, std::complex<double> k) {
    return scattering(g, k).transmission;
}

std::complex<double> reflection(const ScatteringGraph& g, std::complex<double> k) {
    return scattering(g, k).reflection;
}

RationalFunction transmission_rational(const ScatteringGraph& g) {
    ExactPathSystem sys = assemble_exact(g);
    const RationalFunction t_in{sys.entrance_amplitudes.t};
    RationalFunction direct;
    if (g.entrance() == g.exit()) direct = t_in;
    const int n = static_cast<int>(sys.layout.half_edges.size());
    if (n == 0) return direct;

    std::vector<Polynomial> border(static_cast<size_t>(n));
    for (int h : sys.layout.out[static_cast<size_t>(g.entrance())])
        border[static_cast<size_t>(h)] = Polynomial(1);
    RationalFunction form = bilinear_solve(sys.matrix, {sys.rhs_exit}, border)[0];
    return direct + t_in * form;
}

RationalFunction reflection_rational(const ScatteringGraph& g) {
    ExactPathSystem sys = assemble_exact(g);
    const RationalFunction r_in{sys.entrance_amplitudes.r};
    const RationalFunction t_in{sys.entrance_amplitudes.t};
    const int n = static_cast<int>(sys.layout.half_edges.size());
    if (n == 0) return r_in;

    std::vector<Polynomial> border(static_cast<size_t>(n));
    for (int h : sys.layout.out[static_cast<size_t>(g.entrance())])
        border[static_cast<size_t>(h)] = Polynomial(1);
    RationalFunction form = bilinear_solve(sys.matrix, {sys.rhs_entrance}, border)[0];
    return r_in + t_in * form;
}

double coefficient(std::complex<double> t) { return std::norm(t); }

}  // namespace qgraph
