#include <doctest.h>

#include <cmath>

#include "renorm/series.hpp"

using namespace renorm;

namespace {
Polynomial P(std::vector<long> c) {
    std::vector<Rational> q;
    for (long x : c)
        q.emplace_back(x);
    return Polynomial(q);
}
CoeffPoly L() { return CoeffPoly::symbol(sym::L); }
} // namespace

TEST_CASE("polynomial arithmetic and gcd") {
    Polynomial a = P({-1, 0, 1}); // eps^2 - 1
    Polynomial b = P({1, 1});     // eps + 1
    Polynomial q, r;
    Polynomial::divmod(a, b, q, r);
    CHECK(q == P({-1, 1}));
    CHECK(r.isZero());
    CHECK(Polynomial::gcd(a, P({2, 2})) == P({1, 1}));
    CHECK(P({0, 0, 3}).valuation() == 2);
    CHECK((a * b).degree() == 3);
    CHECK(a(2.0) == doctest::Approx(3.0));
}

TEST_CASE("rational functions stay in lowest terms") {
    RationalFunction f(P({-1, 0, 1}), P({2, 2}));
    CHECK(f.num() == P({-1, 1}) * Polynomial(makeRational(1, 2)));
    CHECK(f.den() == P({1}));
    RationalFunction g(P({1}), P({0, 2}));
    CHECK(g.den() == P({0, 1}));
    CHECK(g + g == RationalFunction(P({1}), P({0, 1})));
    CHECK((g - g).isZero());
    CHECK(g * RationalFunction(P({0, 2})) == RationalFunction(Rational(1)));
}

TEST_CASE("laurent expansion of a rational function") {
    // 1 / (eps (1 + eps)) = eps^-1 - 1 + eps - ...
    RationalFunction f(P({1}), P({0, 1, 1}));
    int pole = 0;
    auto s = f.laurent(2, pole);
    CHECK(pole == 1);
    REQUIRE(s.size() == 4);
    CHECK(s[0] == 1);
    CHECK(s[1] == -1);
    CHECK(s[2] == 1);
    CHECK(s[3] == -1);
}

TEST_CASE("even zeta values reduce to powers of zeta2") {
    CHECK(CoeffPoly::zeta(2) == CoeffPoly::symbol(sym::zeta2));
    CHECK(CoeffPoly::zeta(4) == CoeffPoly(makeRational(2, 5)) * CoeffPoly::symbol(sym::zeta2, 2));
    CHECK(CoeffPoly::zeta(6) == CoeffPoly(makeRational(8, 35)) * CoeffPoly::symbol(sym::zeta2, 3));
    for (int n = 2; n <= 10; ++n)
        CHECK(CoeffPoly::zeta(n).evaluate(1, 0) == doctest::Approx(std::riemann_zeta(n)).epsilon(1e-12));
    CHECK(bernoulli(1) == makeRational(-1, 2));
    CHECK(bernoulli(12) == makeRational(-691, 2730));
}

TEST_CASE("coefficient polynomials print and parse") {
    CoeffPoly p = CoeffPoly(makeRational(3, 2)) * L() * L() - CoeffPoly::symbol(sym::zetaOdd(3)) +
                  CoeffPoly::symbol(sym::c, -1) * CoeffPoly::symbol(sym::gammaE) + CoeffPoly(Rational(7));
    CHECK(parseCoeffPoly(p.toString()) == p);
    CHECK(parseCoeffPoly("-L + 1/2*zeta2") == CoeffPoly(makeRational(1, 2)) * CoeffPoly::symbol(sym::zeta2) - L());
    CHECK(parseCoeffPoly("0").isZero());
    CHECK_THROWS(parseCoeffPoly("L + y"));
    CHECK_THROWS(parseCoeffPoly(""));
    CHECK(p.dependsOn(sym::L));
    CHECK_FALSE(p.withoutSymbol(sym::L).dependsOn(sym::L));
}

TEST_CASE("series windows") {
    EpsSeries a(-1, 3);
    a.add(-1, CoeffPoly(Rational(1)));
    a.add(0, L());
    EpsSeries b(-1, 2);
    b.add(-1, CoeffPoly(Rational(2)));
    EpsSeries p = a * b;
    CHECK(p.lo() == -2);
    CHECK(p.hi() == std::min(3 - 1, 2 - 1));
    CHECK(p.coefficient(-2) == CoeffPoly(Rational(2)));
    CHECK(p.coefficient(-1) == CoeffPoly(Rational(2)) * L());
    EpsSeries s = a + b;
    CHECK(s.lo() == -1);
    CHECK(s.hi() == 2);
    CHECK_THROWS_AS(p.coefficient(5), std::out_of_range);
}

TEST_CASE("pole part, finiteness and equivalence") {
    EpsSeries a(-2, 2);
    a.add(-2, CoeffPoly(Rational(1)));
    a.add(1, L());
    CHECK_FALSE(isFinite(a));
    EpsSeries b(-2, 2);
    b.add(-2, CoeffPoly(Rational(1)));
    b.add(0, CoeffPoly(Rational(5)));
    CHECK(equivalent(a, b));
    CHECK(isFinite(a - b));
    CHECK(polePart(a).coeffs().size() == 1);

    EpsSeries shortWindow(-2, -2);
    CHECK_THROWS_AS(isFinite(shortWindow), WindowError);
    CHECK_THROWS_AS(a.clipped(-1, 2), WindowError);
}
