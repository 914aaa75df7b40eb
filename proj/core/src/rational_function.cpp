#include "qgraph/rational_function.hpp"

#include <stdexcept>

namespace qgraph {

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::invalid_argument("RationalFunction: zero denominator");
    reduce();
}

void RationalFunction::reduce() {
    if (num_.is_zero()) {
        den_ = Polynomial(1);
        return;
    }
    Polynomial g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = exact_div(num_, g);
        den_ = exact_div(den_, g);
    }
    // Normalize: denominator integer-primitive, positive leading coefficient.
    Rational den_content = den_.content();
    den_ = den_.scaled(Rational(1) / den_content);
    num_ = num_.scaled(Rational(1) / den_content);
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction out;
    out.num_ = -num_;
    out.den_ = den_;
    return out;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw std::invalid_argument("RationalFunction: division by zero");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

std::complex<double> RationalFunction::eval(std::complex<double> z) const {
    if (num_.is_zero()) return {0.0, 0.0};
    // Normalized Horner per polynomial, scales recombined exactly: keeps the
    // huge coefficients produced by elimination from overflowing double.
    const Rational ratio = num_.max_abs_coefficient() / den_.max_abs_coefficient();
    return num_.eval_normalized(z) / den_.eval_normalized(z) * to_double(Rational(ratio));
}

std::string RationalFunction::to_string(const std::string& var) const {
    if (den_ == Polynomial(1)) return num_.to_string(var);
    return "(" + num_.to_string(var) + ") / (" + den_.to_string(var) + ")";
}

RationalFunction gcd_reduce(const RationalFunction& f) {
    return RationalFunction(f.numerator(), f.denominator());
}

bool rf_equal(const RationalFunction& f, const RationalFunction& g) {
    return (f.numerator() * g.denominator() - g.numerator() * f.denominator()).is_zero();
}

}  // namespace qgraph
