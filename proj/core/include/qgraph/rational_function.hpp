#pragma once

#include <complex>
#include <string>

#include "qgraph/polynomial.hpp"

namespace qgraph {

/// Ratio of polynomials over Q, kept in canonical form: numerator and
/// denominator coprime, denominator integer-primitive with positive leading
/// coefficient. Canonical form makes operator== structural equality.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(1) {}
    RationalFunction(const Rational& constant) : num_(constant), den_(1) {}  // NOLINT
    RationalFunction(long constant) : num_(constant), den_(1) {}             // NOLINT
    RationalFunction(Polynomial num) : num_(std::move(num)), den_(1) {}      // NOLINT
    RationalFunction(Polynomial num, Polynomial den);

    const Polynomial& numerator() const { return num_; }
    const Polynomial& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    RationalFunction& operator+=(const RationalFunction& rhs) { return *this = *this + rhs; }
    RationalFunction& operator-=(const RationalFunction& rhs) { return *this = *this - rhs; }
    RationalFunction& operator*=(const RationalFunction& rhs) { return *this = *this * rhs; }
    RationalFunction& operator/=(const RationalFunction& rhs) { return *this = *this / rhs; }

    bool operator==(const RationalFunction& rhs) const {
        return num_ == rhs.num_ && den_ == rhs.den_;
    }
    bool operator!=(const RationalFunction& rhs) const { return !(*this == rhs); }

    /// Evaluate at a complex point; poles come out as inf/nan, callers filter.
    std::complex<double> eval(std::complex<double> z) const;

    std::string to_string(const std::string& var = "z") const;

private:
    void reduce();
    Polynomial num_;
    Polynomial den_;
};

/// Canonical reduced form. Instances are already kept canonical, so this is
/// idempotent; it exists for callers holding hand-built num/den pairs.
RationalFunction gcd_reduce(const RationalFunction& f);

/// Equality as functions: f.num * g.den - g.num * f.den == 0. Insensitive to
/// representation, so it also works on values that skipped normalization.
bool rf_equal(const RationalFunction& f, const RationalFunction& g);

}  // namespace qgraph
