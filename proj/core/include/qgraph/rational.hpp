#pragma once

#include <gmpxx.h>

#include <string>

namespace qgraph {

/// Arbitrary-precision rational scalar. Coefficient growth under exact
/// elimination on composed graphs overflows any fixed-width integer, so the
/// whole exact layer is built on GMP rationals.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline int sign(const Rational& q) { return sgn(q); }

inline Rational abs_rational(const Rational& q) { return q < 0 ? Rational(-q) : q; }

std::string rational_to_string(const Rational& q);

/// Nearest double, safe for values far outside the double range only in the
/// sense that GMP saturates to +-inf; callers normalize first when that matters.
inline double to_double(const Rational& q) { return q.get_d(); }

}  // namespace qgraph
