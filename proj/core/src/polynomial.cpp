#include "qgraph/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qgraph {

Polynomial::Polynomial(const Rational& constant) {
    if (constant != 0) coeffs_.push_back(constant);
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::monomial(const Rational& c, int power) {
    if (c == 0) return {};
    std::vector<Rational> coeffs(static_cast<size_t>(power) + 1, Rational(0));
    coeffs.back() = c;
    return Polynomial(std::move(coeffs));
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rational& Polynomial::coeff(int i) const {
    static const Rational zero(0);
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return zero;
    return coeffs_[static_cast<size_t>(i)];
}

const Rational& Polynomial::leading_coefficient() const {
    static const Rational zero(0);
    return coeffs_.empty() ? zero : coeffs_.back();
}

Polynomial Polynomial::operator-() const {
    Polynomial out(*this);
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
    for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
    for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (lhs.coeffs_[i] == 0) continue;
        for (size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            if (rhs.coeffs_[j] == 0) continue;
            out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
        }
    }
    return Polynomial(std::move(out));
}

Polynomial Polynomial::scaled(const Rational& factor) const {
    if (factor == 0) return {};
    Polynomial out(*this);
    for (auto& c : out.coeffs_) c *= factor;
    return out;
}

Polynomial Polynomial::shifted(int power) const {
    if (is_zero() || power == 0) return *this;
    if (power < 0) throw std::invalid_argument("shifted: negative power");
    std::vector<Rational> out(static_cast<size_t>(power), Rational(0));
    out.insert(out.end(), coeffs_.begin(), coeffs_.end());
    return Polynomial(std::move(out));
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> out(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
    return Polynomial(std::move(out));
}

Rational Polynomial::eval(const Rational& x) const {
    Rational acc(0);
    for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
}

std::complex<double> Polynomial::eval(std::complex<double> x) const {
    return eval_normalized(x) * to_double(max_abs_coefficient());
}

std::complex<double> Polynomial::eval_normalized(std::complex<double> x) const {
    if (coeffs_.empty()) return {0.0, 0.0};
    const Rational scale = max_abs_coefficient();
    std::complex<double> acc(0.0, 0.0);
    for (size_t i = coeffs_.size(); i-- > 0;) {
        acc = acc * x + to_double(Rational(coeffs_[i] / scale));
    }
    return acc;
}

Rational Polynomial::max_abs_coefficient() const {
    Rational best(0);
    for (const auto& c : coeffs_) {
        Rational a = abs_rational(c);
        if (a > best) best = a;
    }
    return best;
}

double Polynomial::coefficient_scale() const { return to_double(max_abs_coefficient()); }

std::vector<double> Polynomial::normalized_double_coefficients() const {
    std::vector<double> out;
    if (coeffs_.empty()) return out;
    const Rational best = max_abs_coefficient();
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(to_double(Rational(c / best)));
    return out;
}

Rational Polynomial::content() const {
    if (coeffs_.empty()) return Rational(0);
    // gcd of numerators over lcm of denominators, signed by the leading term.
    mpz_class num_gcd(0);
    mpz_class den_lcm(1);
    for (const auto& c : coeffs_) {
        if (c == 0) continue;
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rational content(num_gcd, den_lcm);
    content.canonicalize();
    if (sign(coeffs_.back()) < 0) content = -content;
    return content;
}

Polynomial Polynomial::primitive_part() const {
    if (coeffs_.empty()) return {};
    Rational c = content();
    Polynomial out(*this);
    for (auto& x : out.coeffs_) x /= c;
    return out;
}

std::string Polynomial::to_string(const std::string& var) const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = coeffs_.size(); i-- > 0;) {
        const Rational& c = coeffs_[i];
        if (c == 0) continue;
        Rational a = abs_rational(c);
        if (first) {
            if (sign(c) < 0) os << "-";
            first = false;
        } else {
            os << (sign(c) < 0 ? " - " : " + ");
        }
        const bool unit = (a == 1);
        if (i == 0) {
            os << rational_to_string(a);
        } else {
            if (!unit) os << rational_to_string(a) << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

PolyDivMod divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::invalid_argument("divmod: zero divisor");
    PolyDivMod out;
    out.remainder = a;
    const int db = b.degree();
    const Rational& lead = b.leading_coefficient();
    std::vector<Rational> q;
    if (out.remainder.degree() >= db) q.assign(static_cast<size_t>(out.remainder.degree() - db) + 1, Rational(0));
    while (!out.remainder.is_zero() && out.remainder.degree() >= db) {
        const int shift = out.remainder.degree() - db;
        Rational factor = out.remainder.leading_coefficient() / lead;
        q[static_cast<size_t>(shift)] = factor;
        out.remainder -= b.scaled(factor).shifted(shift);
    }
    out.quotient = Polynomial(std::move(q));
    return out;
}

Polynomial exact_div(const Polynomial& a, const Polynomial& b) {
    PolyDivMod d = divmod(a, b);
    if (!d.remainder.is_zero()) throw std::logic_error("exact_div: nonzero remainder");
    return d.quotient;
}

Polynomial poly_gcd(Polynomial a, Polynomial b) {
    if (a.is_zero()) return b.is_zero() ? Polynomial{} : b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    a = a.primitive_part();
    b = b.primitive_part();
    if (a.degree() < b.degree()) std::swap(a, b);
    // Primitive PRS: remainder made primitive each step keeps coefficients small.
    while (!b.is_zero()) {
        Polynomial r = divmod(a, b).remainder;
        a = std::move(b);
        b = r.is_zero() ? Polynomial{} : r.primitive_part();
    }
    return a.primitive_part();
}

std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& p) {
    std::vector<std::pair<Polynomial, int>> out;
    if (p.is_zero() || p.degree() == 0) return out;
    // Yun's algorithm on the primitive part.
    Polynomial f = p.primitive_part();
    Polynomial fp = f.derivative();
    Polynomial a0 = poly_gcd(f, fp);
    Polynomial b = exact_div(f, a0);
    Polynomial c = exact_div(fp, a0);
    Polynomial d = c - b.derivative();
    int mult = 1;
    while (b.degree() > 0) {
        Polynomial a = poly_gcd(b, d);
        if (a.degree() > 0) out.emplace_back(a, mult);
        Polynomial b_next = exact_div(b, a);
        Polynomial c_next = exact_div(d, a);
        b = std::move(b_next);
        d = c_next - b.derivative();
        ++mult;
    }
    return out;
}

}  // namespace qgraph
