#pragma once

#include <complex>
#include <vector>

#include "qgraph/amplitudes.hpp"
#include "qgraph/graph.hpp"
#include "qgraph/polynomial.hpp"
#include "qgraph/rational_function.hpp"

namespace qgraph {

/// One directed half of an undirected edge.
struct HalfEdge {
    int tail = 0;
    int head = 0;
    int mult = 1;
    int reverse = 0;  // index of the opposite direction
};

/// Directed half-edge indexing shared by the numeric and exact assemblies.
/// Unknowns are the path-family amplitudes, one per half-edge; parallel edges
/// get distinct indices, which is what makes composed multigraphs work. Edges
/// are laid out in breadth-first order from the entrance so coupled unknowns
/// sit near each other and elimination stays banded.
struct HalfEdgeLayout {
    std::vector<HalfEdge> half_edges;   // 2 per edge, reverse pairs adjacent
    std::vector<std::vector<int>> out;  // per vertex: half-edges leaving it
};
HalfEdgeLayout build_half_edge_layout(const ScatteringGraph& g);

/// The path-family linear system. Row h states, for v = head(h):
///   p_h = z^mult(h) * ( r_v p_rev(h) + t_v sum of p_h' over other h' out of v
///                       + t_v if v is the target vertex )
/// The matrix is shared by both right-hand sides: rhs_exit targets the exit
/// vertex (transmission) and rhs_entrance targets the entrance (reflection).
struct NumericPathSystem {
    HalfEdgeLayout layout;
    std::vector<std::vector<std::complex<double>>> matrix;
    std::vector<std::complex<double>> rhs_exit;
    std::vector<std::complex<double>> rhs_entrance;
    AmplitudePair entrance_amplitudes;
    std::complex<double> z;
};

struct ExactPathSystem {
    HalfEdgeLayout layout;
    std::vector<std::vector<Polynomial>> matrix;
    std::vector<Polynomial> rhs_exit;
    std::vector<Polynomial> rhs_entrance;
    RationalAmplitudePair entrance_amplitudes;
};

/// Numeric assembly at complex k, z = e^{ik}. Requires a connected two-lead
/// graph (std::invalid_argument otherwise); propagates the singular-coupling
/// error from the vertex amplitudes.
NumericPathSystem assemble_numeric(const ScatteringGraph& g, std::complex<double> k);

/// Exact assembly in the indeterminate z. Requires Neumann-Kirchhoff
/// couplings everywhere, where the vertex amplitudes are k-independent
/// rationals; throws std::invalid_argument for any nonzero alpha.
ExactPathSystem assemble_exact(const ScatteringGraph& g);

/// Transmission and reflection amplitudes at complex k, one factorization for
/// both. For real k, |t|^2 + |r|^2 = 1. Throws std::runtime_error when the
/// solved system fails the backward-error residual bound.
struct ScatteringAmplitudes {
    std::complex<double> transmission;
    std::complex<double> reflection;
};
ScatteringAmplitudes scattering(const ScatteringGraph& g, std::complex<double> k);

std::complex<double> transmission(const ScatteringGraph& g, std::complex<double> k);
std::complex<double> reflection(const ScatteringGraph& g, std::complex<double> k);

/// Exact transmission amplitude as a reduced rational function of z = e^{ik}.
RationalFunction transmission_rational(const ScatteringGraph& g);

/// Exact reflection amplitude seen from the entrance lead.
RationalFunction reflection_rational(const ScatteringGraph& g);

/// Transmission coefficient |t|^2.
double coefficient(std::complex<double> t);

}  // namespace qgraph
