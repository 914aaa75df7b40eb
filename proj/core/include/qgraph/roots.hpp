#pragma once

#include <complex>
#include <vector>

#include "qgraph/polynomial.hpp"

namespace qgraph {

struct Root {
    std::complex<double> value;
    int multiplicity = 1;
};

/// All complex roots of p with multiplicities. The polynomial is split into
/// squarefree factors exactly first, so multiple roots come out as simple
/// roots of a factor plus an exact multiplicity instead of a numerically fused
/// cluster. Each factor goes through a balanced companion eigensolve and a
/// Newton polish against the exact coefficients. Roots are sorted by real
/// part, then imaginary part. Throws std::runtime_error if a polished root
/// fails the residual bound tol * scale, where scale accounts for coefficient
/// size and root magnitude.
std::vector<Root> roots(const Polynomial& p, double tol = 1e-10);

}  // namespace qgraph
