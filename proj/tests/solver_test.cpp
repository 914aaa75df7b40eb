#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "qgraph/catalog.hpp"
#include "qgraph/graph.hpp"
#include "qgraph/solver.hpp"

using namespace qgraph;

namespace {

Polynomial P(std::vector<long> coeffs) {
    std::vector<Rational> c;
    c.reserve(coeffs.size());
    for (long v : coeffs) c.emplace_back(v);
    return Polynomial(std::move(c));
}

constexpr double kPi = 3.14159265358979323846;

/// Leads swapped, topology untouched.
ScatteringGraph swap_leads(const ScatteringGraph& g) {
    ScatteringGraph out = g;
    out.set_leads(g.exit(), g.entrance());
    return out;
}

}  // namespace

TEST_CASE("closed form transmission for the catalog") {
    // the authoritative check for the catalog topology and the recursion
    CHECK_EQ(transmission_rational(build_named("D")),
             RationalFunction(P({0, 0, 8}), P({9, 0, 0, 0, -1})));
    CHECK_EQ(transmission_rational(build_named("H")),
             RationalFunction(P({0, 0, 0, 8}), P({9, 0, 0, 0, 0, 0, -1})));
    CHECK_EQ(transmission_rational(build_named("Dtilde")),
             RationalFunction(P({0, 0, 16, 16}), P({27, 9, 6, -6, -1, -3})));
    CHECK_EQ(transmission_rational(build_named("Q")),
             RationalFunction(P({0, 0, 0, 32, 32}), P({9, 0, 4, 0, 3}) * P({9, -3, 1, -3})));
    CHECK_EQ(transmission_rational(build_named("X")),
             RationalFunction(P({0, 0, 0, 64}), P({81, 0, 9, 0, -17, 0, -9})));
}

TEST_CASE("system sizes") {
    CHECK_EQ(assemble_exact(build_named("D")).layout.half_edges.size(), 8);
    CHECK_EQ(assemble_exact(build_named("Q")).layout.half_edges.size(), 16);
    CHECK_EQ(assemble_numeric(build_named("X"), {1.0, 0.0}).matrix.size(), 16);
}

TEST_CASE("numeric transmission at landmark points") {
    ScatteringGraph d = build_named("D");
    // z = 1 reached at k = 2*pi, away from the k = 0 coupling singularity
    CHECK(std::abs(transmission(d, {2 * kPi, 0.0}) - std::complex<double>(1.0, 0.0)) < 1e-12);
    CHECK(std::abs(transmission(d, {kPi / 2, 0.0}) - std::complex<double>(-1.0, 0.0)) < 1e-12);

    // X at z = -1: T = -64/(81+9-17-9) = -1
    ScatteringGraph x = build_named("X");
    CHECK(std::abs(coefficient(transmission(x, {kPi, 0.0})) - 1.0) < 1e-12);

    // Q at z = -1: numerator factor (1+z) kills transmission
    ScatteringGraph q = build_named("Q");
    CHECK(coefficient(transmission(q, {kPi, 0.0})) < 1e-20);
    CHECK(std::abs(coefficient(reflection(q, {kPi, 0.0})) - 1.0) < 1e-12);
}

TEST_CASE("reflection conventions") {
    // single NK vertex of degree 2 carrying both leads: transparent point
    ScatteringGraph trivial;
    int v = trivial.add_vertex("v");
    trivial.set_leads(v, v);
    auto s = scattering(trivial, {1.3, 0.0});
    CHECK(std::abs(s.transmission - std::complex<double>(1.0, 0.0)) < 1e-14);
    CHECK(std::abs(s.reflection) < 1e-14);
    CHECK_EQ(transmission_rational(trivial), RationalFunction(1));

    // D at z = i transmits fully, so reflection must vanish
    CHECK(std::abs(reflection(build_named("D"), {kPi / 2, 0.0})) < 1e-12);
}

TEST_CASE("unitarity on the catalog") {
    std::mt19937 rng(321);
    std::uniform_real_distribution<double> k_dist(0.05, 2 * kPi);
    for (const auto& name : catalog_names()) {
        ScatteringGraph g = build_named(name);
        for (int i = 0; i < 40; ++i) {
            const double k = k_dist(rng);
            auto s = scattering(g, {k, 0.0});
            CHECK(std::abs(coefficient(s.transmission) + coefficient(s.reflection) - 1.0) < 1e-10);
        }
    }
}

TEST_CASE("unitarity with nonzero couplings") {
    ScatteringGraph g;
    int l = g.add_vertex("L", 0.7);
    int a = g.add_vertex("a", -1.2);
    int r = g.add_vertex("R", 2.0);
    g.add_edge(l, a);
    g.add_edge(a, r);
    g.add_edge(l, r, 2);
    g.set_leads(l, r);
    for (double k : {0.3, 1.1, 2.9, 5.0}) {
        auto s = scattering(g, {k, 0.0});
        CHECK(std::abs(coefficient(s.transmission) + coefficient(s.reflection) - 1.0) < 1e-10);
    }
}

TEST_CASE("exact matches numeric on the unit circle") {
    std::mt19937 rng(77);
    std::uniform_real_distribution<double> k_dist(0.05, 2 * kPi);
    for (const auto& name : catalog_names()) {
        ScatteringGraph g = build_named(name);
        RationalFunction t = transmission_rational(g);
        for (int i = 0; i < 64; ++i) {
            const double k = k_dist(rng);
            const std::complex<double> z = std::exp(std::complex<double>(0.0, k));
            CHECK(std::abs(t.eval(z) - transmission(g, {k, 0.0})) < 1e-10);
        }
    }
}

TEST_CASE("periodicity in k") {
    ScatteringGraph q = build_named("Q");
    for (double k : {0.4, 1.7, 2.9}) {
        CHECK(std::abs(transmission(q, {k, 0.0}) - transmission(q, {k + 2 * kPi, 0.0})) < 1e-10);
    }
    // coefficient sub-periods: D repeats every pi/2, H every pi/3
    ScatteringGraph d = build_named("D");
    ScatteringGraph h = build_named("H");
    for (int i = 1; i <= 40; ++i) {
        const double k = i * 0.07;
        CHECK(std::abs(coefficient(transmission(d, {k, 0.0})) -
                       coefficient(transmission(d, {k + kPi / 2, 0.0}))) < 1e-10);
        CHECK(std::abs(coefficient(transmission(h, {k, 0.0})) -
                       coefficient(transmission(h, {k + kPi / 3, 0.0}))) < 1e-10);
    }
}

TEST_CASE("time reversal symmetry about pi") {
    for (const auto& name : catalog_names()) {
        ScatteringGraph g = build_named(name);
        for (int i = 1; i <= 30; ++i) {
            const double x = i * (kPi / 31);
            CHECK(std::abs(coefficient(transmission(g, {kPi + x, 0.0})) -
                           coefficient(transmission(g, {kPi - x, 0.0}))) < 1e-10);
        }
    }
}

TEST_CASE("entrance exit swap leaves transmission unchanged") {
    for (const char* name : {"Q", "X", "Dtilde"}) {
        ScatteringGraph g = build_named(name);
        ScatteringGraph swapped = swap_leads(g);
        CHECK_EQ(transmission_rational(g), transmission_rational(swapped));
        for (double k : {0.9, 2.2, 4.4})
            CHECK(std::abs(transmission(g, {k, 0.0}) - transmission(swapped, {k, 0.0})) < 1e-12);
    }
}

TEST_CASE("length multipliers enter as powers of z") {
    // single 2-long edge between the lead vertices behaves like z^2 chain
    ScatteringGraph g;
    int l = g.add_vertex("L");
    int r = g.add_vertex("R");
    g.add_edge(l, r, 2);
    g.set_leads(l, r);
    CHECK_EQ(transmission_rational(g), RationalFunction(P({0, 0, 1})));

    // mult on the D arms doubles every exponent of the closed form
    ScatteringGraph d2;
    int dl = d2.add_vertex("L");
    int da = d2.add_vertex("a");
    int dc = d2.add_vertex("c");
    int dr = d2.add_vertex("R");
    d2.add_edge(dl, da, 2);
    d2.add_edge(da, dr, 2);
    d2.add_edge(dl, dc, 2);
    d2.add_edge(dc, dr, 2);
    d2.set_leads(dl, dr);
    CHECK_EQ(transmission_rational(d2),
             RationalFunction(P({0, 0, 0, 0, 8}), P({9, 0, 0, 0, 0, 0, 0, 0, -1})));
}

TEST_CASE("solver error conditions") {
    ScatteringGraph no_leads = build_named("D");
    ScatteringGraph fresh;
    fresh.add_vertex("a");
    fresh.add_vertex("b");
    CHECK_THROWS_AS(assemble_numeric(fresh, {1.0, 0.0}), std::invalid_argument);

    ScatteringGraph nonnk;
    int a = nonnk.add_vertex("a", 1.0);
    int b = nonnk.add_vertex("b");
    nonnk.add_edge(a, b);
    nonnk.set_leads(a, b);
    CHECK_THROWS_AS(transmission_rational(nonnk), std::invalid_argument);
    CHECK_NOTHROW(transmission(nonnk, {1.0, 0.0}));

    // NK coupling is singular at k = 0
    CHECK_THROWS_AS(transmission(build_named("D"), {0.0, 0.0}), std::domain_error);
}

TEST_CASE("coefficient") {
    CHECK_EQ(coefficient({1.0, 0.0}), 1.0);
    CHECK_EQ(coefficient({-1.0, 0.0}), 1.0);
    CHECK(std::abs(coefficient({0.6, 0.8}) - 1.0) < 1e-15);
}

namespace {

Polynomial reversed_coeffs(const Polynomial& p) {
    std::vector<Rational> c;
    for (int i = p.degree(); i >= 0; --i) c.push_back(p.coeff(i));
    return Polynomial(std::move(c));
}

/// f(1/z) as a rational function of z.
RationalFunction at_inverse(const RationalFunction& f) {
    const int dn = f.numerator().degree();
    const int dd = f.denominator().degree();
    Polynomial num = reversed_coeffs(f.numerator());
    Polynomial den = reversed_coeffs(f.denominator());
    if (dd >= dn) {
        num = num.shifted(dd - dn);
    } else {
        den = den.shifted(dn - dd);
    }
    return RationalFunction(num, den);
}

}  // namespace

TEST_CASE("exact unitarity identity on the unit circle") {
    // |z| = 1 makes conj(f(z)) = f(1/z) for real coefficients, so unitarity
    // is the rational identity T(z)T(1/z) + R(z)R(1/z) = 1
    const RationalFunction one{Polynomial(1)};
    for (const auto& name : catalog_names()) {
        CAPTURE(name);
        const ScatteringGraph g = build_named(name);
        const RationalFunction t = transmission_rational(g);
        const RationalFunction r = reflection_rational(g);
        CHECK(rf_equal(t * at_inverse(t) + r * at_inverse(r), one));
    }

    ScatteringGraph trivial;
    const int a = trivial.add_vertex("a");
    const int b = trivial.add_vertex("b");
    trivial.add_edge(a, b, 3);
    trivial.set_leads(a, b);
    const RationalFunction t = transmission_rational(trivial);
    const RationalFunction r = reflection_rational(trivial);
    CHECK(rf_equal(t * at_inverse(t) + r * at_inverse(r), one));
    CHECK(rf_equal(r, RationalFunction()));
}

TEST_CASE("exact reflection agrees with the numeric solve") {
    std::mt19937 rng(511u);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
    for (const auto& name : catalog_names()) {
        CAPTURE(name);
        const ScatteringGraph g = build_named(name);
        const RationalFunction r = reflection_rational(g);
        CHECK(rf_equal(r, reflection_rational(swap_leads(g))));
        for (int i = 0; i < 16; ++i) {
            const double kl = angle(rng);
            const std::complex<double> k(kl, 0.0);
            const std::complex<double> exact = r.eval(std::exp(std::complex<double>(0.0, kl)));
            CHECK(std::abs(exact - reflection(g, k)) < 1e-10);
        }
    }
}
