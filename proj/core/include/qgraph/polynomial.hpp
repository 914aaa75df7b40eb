#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qgraph/rational.hpp"

namespace qgraph {

/// Univariate polynomial over the rationals, coefficients stored in ascending
/// degree with no trailing zeros. The zero polynomial has an empty list.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(const Rational& constant);  // NOLINT: implicit by design
    Polynomial(long constant) : Polynomial(Rational(constant)) {}
    explicit Polynomial(std::vector<Rational> coeffs);

    /// c * z^power
    static Polynomial monomial(const Rational& c, int power);
    static Polynomial variable() { return monomial(1, 1); }

    bool is_zero() const { return coeffs_.empty(); }
    /// Canonical degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    /// Coefficient of z^i, zero outside the stored range.
    const Rational& coeff(int i) const;
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    const Rational& leading_coefficient() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
    friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
    friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

    Polynomial scaled(const Rational& factor) const;
    /// Multiply by z^power.
    Polynomial shifted(int power) const;
    Polynomial derivative() const;

    bool operator==(const Polynomial& rhs) const { return coeffs_ == rhs.coeffs_; }
    bool operator!=(const Polynomial& rhs) const { return !(*this == rhs); }

    Rational eval(const Rational& x) const;
    /// Horner evaluation with the coefficients pre-scaled by 1/max|c_i| so that
    /// huge exact coefficients survive the trip through double.
    std::complex<double> eval(std::complex<double> x) const;
    /// Horner on coeffs/max|c_i|; the true value is this times max|c_i|.
    std::complex<double> eval_normalized(std::complex<double> x) const;

    /// Largest |coefficient|, exact (0 for the zero polynomial).
    Rational max_abs_coefficient() const;
    /// Largest |coefficient| as a double (0 for the zero polynomial).
    double coefficient_scale() const;
    /// Coefficients divided by max|c_i|, converted to double. Empty for zero.
    std::vector<double> normalized_double_coefficients() const;

    /// content() * primitive_part() == *this, primitive_part has coprime
    /// integer coefficients with positive leading coefficient.
    Rational content() const;
    Polynomial primitive_part() const;

    std::string to_string(const std::string& var = "z") const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

struct PolyDivMod {
    Polynomial quotient;
    Polynomial remainder;
};

/// Field division over Q[z]; throws std::invalid_argument on zero divisor.
PolyDivMod divmod(const Polynomial& a, const Polynomial& b);

/// Division known to be exact; throws std::logic_error if a remainder appears.
Polynomial exact_div(const Polynomial& a, const Polynomial& b);

/// Primitive polynomial GCD (primitive pseudo-remainder sequence). Result is
/// integer-primitive with positive leading coefficient; gcd(0,0) == 0.
Polynomial poly_gcd(Polynomial a, Polynomial b);

/// Squarefree decomposition (Yun): list of (factor, multiplicity) with the
/// factors primitive, pairwise coprime and squarefree. z^k factors included.
std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& p);

}  // namespace qgraph
