#pragma once

#include <complex>

#include "qgraph/rational.hpp"

namespace qgraph {

/// Reflection and per-edge transmission amplitude at a single vertex.
struct AmplitudePair {
    std::complex<double> r;
    std::complex<double> t;
};

/// Amplitudes for a delta coupling of strength alpha at a degree-d vertex:
///   r = (alpha - (d-2)ik) / (ikd - alpha),  t = 2ik / (ikd - alpha).
/// k may be complex (needed off the real axis near resonances). Throws
/// std::domain_error when ikd == alpha, where the coupling is singular, and
/// std::invalid_argument for d < 1 or non-finite alpha.
AmplitudePair delta_amplitudes(int d, double alpha, std::complex<double> k);

/// Exact amplitudes in the Neumann-Kirchhoff case (alpha = 0), where the k
/// dependence cancels: r = 2/d - 1, t = 2/d.
struct RationalAmplitudePair {
    Rational r;
    Rational t;
};
RationalAmplitudePair nk_amplitudes(int d);

}  // namespace qgraph
