#include "qgraph/roots.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qgraph {

namespace {

/// Simple roots of a squarefree polynomial with double coefficients already
/// normalized to max |c_i| == 1.
std::vector<std::complex<double>> companion_roots(const std::vector<double>& c) {
    const int deg = static_cast<int>(c.size()) - 1;
    std::vector<std::complex<double>> out;
    if (deg < 1) return out;
    if (deg == 1) {
        out.push_back({-c[0] / c[1], 0.0});
        return out;
    }
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(deg, deg);
    for (int i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;
    for (int i = 0; i < deg; ++i) companion(i, deg - 1) = -c[static_cast<size_t>(i)] / c[static_cast<size_t>(deg)];
    Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success) throw std::runtime_error("roots: eigensolver failed");
    out.reserve(static_cast<size_t>(deg));
    for (int i = 0; i < deg; ++i) out.push_back(solver.eigenvalues()(i));
    return out;
}

/// Newton iteration against the exact coefficients, all evaluation done on
/// normalized polynomials so elimination-sized coefficients cannot overflow.
/// Companion eigenvalues are accurate to machine epsilon times the matrix
/// norm; on a simple root a few Newton steps reach full double precision.
std::complex<double> polish(const Polynomial& f, const Polynomial& fp, std::complex<double> x) {
    const double step_scale = to_double(Rational(f.max_abs_coefficient() / fp.max_abs_coefficient()));
    double best_abs = std::abs(f.eval_normalized(x));
    std::complex<double> best = x;
    for (int iter = 0; iter < 32 && best_abs > 0.0; ++iter) {
        std::complex<double> d = fp.eval_normalized(x);
        if (d == std::complex<double>(0.0, 0.0)) break;
        std::complex<double> next = x - f.eval_normalized(x) / d * step_scale;
        double next_abs = std::abs(f.eval_normalized(next));
        if (!(next_abs < best_abs)) break;
        best_abs = next_abs;
        best = next;
        x = next;
    }
    return best;
}

}  // namespace

std::vector<Root> roots(const Polynomial& p, double tol) {
    std::vector<Root> out;
    if (p.is_zero()) throw std::invalid_argument("roots: zero polynomial");
    if (p.degree() == 0) return out;
    for (const auto& [factor, mult] : squarefree_decomposition(p)) {
        const Polynomial deriv = factor.derivative();
        const std::vector<double> c = factor.normalized_double_coefficients();
        for (std::complex<double> z : companion_roots(c)) {
            z = polish(factor, deriv, z);
            const double bound = tol * std::max(1.0, std::pow(std::abs(z), factor.degree()));
            if (std::abs(factor.eval_normalized(z)) > bound)
                throw std::runtime_error("roots: residual check failed");
            out.push_back({z, mult});
        }
    }
    std::sort(out.begin(), out.end(), [](const Root& a, const Root& b) {
        if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
        return a.value.imag() < b.value.imag();
    });
    return out;
}

}  // namespace qgraph
