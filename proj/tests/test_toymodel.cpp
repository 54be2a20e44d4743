#include <doctest.h>

#include <boost/math/quadrature/exp_sinh.hpp>

#include <cmath>

#include "renorm/hopf.hpp"
#include "renorm/oracle.hpp"
#include "renorm/toymodel.hpp"
#include "support.hpp"

using namespace renorm;

namespace {

const std::vector<Letter> kTwo{{"x1", 1, 0}, {"x2", 2, 0}};
Alphabet two() { return testsupport::twoLetters(); }
Word W(const std::string &s) { return parseWord(s, two()); }

double betaFn(double x, double y) { return std::tgamma(x) * std::tgamma(y) / std::tgamma(x + y); }

RationalFunction inv(long k, long power) {
    Polynomial d(Rational(1));
    for (long i = 0; i < power; ++i)
        d = d * Polynomial::linear(0, k);
    return RationalFunction(Polynomial(Rational(1)), d);
}

CoeffPoly L(int power = 1) { return CoeffPoly::symbol(sym::L, power); }

bool lFree(const EpsSeries &s) {
    for (const auto &[k, c] : s.coeffs())
        if (c.dependsOn(sym::L))
            return false;
    return true;
}

Letter letter(int j, int degree = 0) { return Letter{"x" + std::to_string(j), j, degree}; }

} // namespace

TEST_CASE("iterated model closed forms") {
    ScaledSum s = evalWord(W("((x1)x1)"), Model::Iterated);
    CHECK(s == ScaledSum::term({0, 2}, Prefactor(inv(1, 2) * RationalFunction(makeRational(1, 2)))));
    ScaledSum x = evalWord(W("(x2)"), Model::Iterated);
    CHECK(x == ScaledSum::term({0, 2}, Prefactor(inv(2, 1))));
    CHECK(evalWord(Word(), Model::Iterated) == ScaledSum::one());
    CHECK_THROWS_AS(evalWord(Word(Ipw(letter(1, 1))), Model::Iterated), ModelDomainError);
}

TEST_CASE("propagator model closed forms agree with Beta functions") {
    const double eps = 0.05, c = 2.0;
    for (int j : {1, 2}) {
        ScaledSum s = evalWord(Word(Ipw(letter(j))), Model::Propagator);
        CHECK(s(eps, c) == doctest::Approx(betaFn(j * eps, 1 - j * eps) * std::pow(c, -j * eps)).epsilon(1e-12));
    }
    for (auto [j1, j2] : {std::pair{1, 1}, std::pair{1, 2}, std::pair{2, 1}}) {
        Word w(Ipw(letter(j2), {Ipw(letter(j1))}));
        const double expected = betaFn(j1 * eps, 1 - j1 * eps) * betaFn(1 - j2 * eps, (j1 + j2) * eps) *
                                std::pow(c, -(j1 + j2) * eps);
        CHECK(evalWord(w, Model::Propagator)(eps, c) == doctest::Approx(expected).epsilon(1e-12));
    }
    // linearly divergent letter on its own
    for (int j : {1, 2}) {
        ScaledSum s = evalWord(Word(Ipw(letter(j, 1))), Model::Propagator);
        REQUIRE(s.terms().size() == 1);
        CHECK(s.terms().begin()->first == Scaling{1, j});
        CHECK(s(eps, c) == doctest::Approx(betaFn(2 - j * eps, j * eps - 1) * std::pow(c, 1 - j * eps)).epsilon(1e-12));
    }
}

TEST_CASE("linear letter value by a convergent integral") {
    // B(2 - a, a - 1) = B(2 - a, a) / (a - 1), and B(2 - a, a) = int_0^inf t^(1-a) (1+t)^-2 dt
    const double eps = 0.1, j = 1;
    const double a = j * eps;
    boost::math::quadrature::exp_sinh<double> integrator;
    auto f = [&](double s) {
        const double u = std::exp(-s);
        return std::pow(u, a) / ((1 + u) * (1 + u));
    };
    auto g = [&](double s) {
        const double t = std::exp(-s);
        return t * std::pow(t, 1 - a) / ((1 + t) * (1 + t));
    };
    const double b = (integrator.integrate(f) + integrator.integrate(g)) / (a - 1);
    ScaledSum s = evalWord(Word(Ipw(letter(1, 1))), Model::Propagator);
    CHECK(s(eps, 1.0) == doctest::Approx(b).epsilon(1e-8));
}

TEST_CASE("nesting a linear subword is outside the model") {
    Word w(Ipw(letter(1), {Ipw(letter(2, 1))}));
    CHECK_THROWS_AS(evalWord(w, Model::Propagator), ModelDomainError);
}

TEST_CASE("quadrature agrees with the closed forms") {
    const double eps = 0.05;
    SUBCASE("iterated letter") {
        auto r = numericOracle(W("(x1)"), Model::Iterated, 0.1, 2.0);
        CHECK(r.value == doctest::Approx(std::pow(2.0, -0.1) / 0.1).epsilon(1e-6));
    }
    SUBCASE("propagator two-loop") {
        auto r = numericOracle(W("((x1)x1)"), Model::Propagator, eps, 3.0);
        CHECK(r.value == doctest::Approx(evalWord(W("((x1)x1)"), Model::Propagator)(eps, 3.0)).epsilon(1e-6));
    }
    SUBCASE("iterated eight-term word") {
        Word w = W("((x1)(x2)x1)");
        auto r = numericOracle(w, Model::Iterated, eps, 2.0);
        CHECK(r.value == doctest::Approx(evalWord(w, Model::Iterated)(eps, 2.0)).epsilon(1e-6));
    }
    SUBCASE("depth three and products") {
        for (auto text : {"(((x1)x2)x1)", "((x1)x1)(x2)", "((x2)(x1)x1)"}) {
            Word w = W(text);
            for (Model m : {Model::Iterated, Model::Propagator}) {
                auto r = numericOracle(w, m, 0.1, 2.0);
                CHECK(r.value == doctest::Approx(evalWord(w, m)(0.1, 2.0)).epsilon(1e-6));
            }
        }
    }
    CHECK_THROWS_AS(numericOracle(W("((((x1)x1)x1)x1)"), Model::Iterated, eps, 2.0), OracleError);
}

TEST_CASE("expansion of a single letter") {
    for (long j : {1, 2, 3}) {
        ScaledSum s = ScaledSum::term({0, j}, Prefactor(inv(j, 1)));
        EpsSeries e = expand(s, {-1, 2});
        CHECK(e.coefficient(-1) == CoeffPoly(makeRational(1, j)));
        CHECK(e.coefficient(0) == -L());
        CHECK(e.coefficient(1) == CoeffPoly(makeRational(j, 2)) * L(2));
        CHECK(e.coefficient(2) == CoeffPoly(makeRational(-j * j, 6)) * L(3));
    }
}

TEST_CASE("Beta expansion has no Euler constant") {
    for (int j : {1, 2, 3}) {
        ScaledSum s = ScaledSum::term({0, 0}, Prefactor::beta({0, j, 1, -j}));
        EpsSeries e = expand(s, {-1, 6});
        CHECK(e.coefficient(-1) == CoeffPoly(makeRational(1, j)));
        CHECK(e.coefficient(0).isZero());
        for (const auto &[k, c] : e.coeffs())
            CHECK_FALSE(c.dependsOn(sym::gammaE));
        const double x = 1e-3;
        CHECK(e.evaluate(x, 1.0) == doctest::Approx(betaFn(j * x, 1 - j * x)).epsilon(1e-12));
    }
    // a ratio with a nontrivial Euler constant in each Gamma still cancels it
    ScaledSum g = ScaledSum::term({0, 0}, Prefactor(RationalFunction(Rational(1)), {GammaRatio(-1, 3)}));
    for (const auto &[k, c] : expand(g, {0, 5}).coeffs())
        CHECK_FALSE(c.dependsOn(sym::gammaE));
    CHECK(expand(g, {0, 8}).evaluate(0.01, 1.0) ==
          doctest::Approx(std::tgamma(1 - 0.01) * std::tgamma(1.03) / std::tgamma(1.02)).epsilon(1e-13));
}

TEST_CASE("expansion is multiplicative within the window") {
    testsupport::WordGen gen(23, kTwo);
    for (int i = 0; i < 20; ++i) {
        Word a = gen.word(2), b = gen.word(2);
        for (Model m : {Model::Iterated, Model::Propagator}) {
            ScaledSum sa = evalWord(a, m), sb = evalWord(b, m);
            const int la = static_cast<int>(a.length()), lb = static_cast<int>(b.length());
            EpsSeries prod = expand(sa, {-la, 3 + lb}) * expand(sb, {-lb, 3 + la});
            CHECK(expand(sa * sb, {-la - lb, 3}) == prod.clipped(-la - lb, 3));
        }
    }
}

TEST_CASE("window errors") {
    Expr x = toExpr(W("((x1)x1)"));
    CHECK_THROWS_AS(evalExpr(x, Model::Iterated, Scheme::Identity, {-1, 3}), WindowError);
    CHECK_NOTHROW(evalExpr(x, Model::Iterated, Scheme::Identity, {-2, 3}));
    CHECK_THROWS_AS(expand(evalWord(W("((x1)x1)"), Model::Iterated), {-1, 3}), WindowError);
}

TEST_CASE("momentum renormalization of a single letter") {
    EpsSeries s = evalExpr(renormalize(W("(x1)")), Model::Iterated, Scheme::Momentum);
    CHECK(s.lo() == -1);
    CHECK(isFinite(s));
    CHECK(s.coefficient(0) == -L());
    for (int j : {1, 2}) {
        Expr e = toExpr(Word(Ipw(letter(j)))) - applyR(toExpr(Word(Ipw(letter(j)))));
        CHECK(isFinite(evalExpr(e, Model::Propagator, Scheme::Momentum)));
    }
}

TEST_CASE("bare words have poles") {
    CHECK_FALSE(isFinite(evalExpr(toExpr(W("((x1)x2)")), Model::Iterated, Scheme::Momentum)));
    CHECK_FALSE(isFinite(evalExpr(toExpr(W("(x1)")), Model::Iterated, Scheme::Identity)));
}

TEST_CASE("renormalized two-loop word is finite") {
    CHECK(isFinite(evalExpr(renormalize(W("((x1)x2)")), Model::Iterated, Scheme::Momentum)));
    CHECK(isFinite(evalExpr(renormalize(W("((x1)x2)")), Model::Propagator, Scheme::Momentum)));
}

TEST_CASE("series and closed-form evaluation agree for momentum and identity") {
    for (const auto &w : enumerateWordsUpTo(3, kTwo)) {
        Expr r = renormalize(w);
        for (Model m : {Model::Iterated, Model::Propagator})
            for (Scheme s : {Scheme::Momentum, Scheme::Identity}) {
                Window win = defaultWindow(r);
                CHECK(evalExprBySeries(r, m, s, win) == evalExpr(r, m, s, win));
            }
    }
}

TEST_CASE("scheme soundness") {
    for (const auto &w : enumerateWordsUpTo(4, kTwo)) {
        Expr x = toExpr(w), rx = applyR(x);
        for (Model m : {Model::Iterated, Model::Propagator}) {
            EpsSeries bare = evalExpr(x, m, Scheme::Identity);
            CHECK(equivalent(bare, evalExpr(rx, m, Scheme::MS)));
            const bool primitive = w.factors().size() == 1 && w.factors().front().isPrimitive();
            if (primitive)
                CHECK(equivalent(bare, evalExpr(rx, m, Scheme::Momentum)));
        }
    }
}

TEST_CASE("momentum subtraction changes subleading poles of nested words") {
    // R[((x1)x1)] - ((x1)x1) = (1 - c^(-2 eps)) / (2 eps^2) in the iterated model
    Expr x = toExpr(W("((x1)x1)"));
    EpsSeries d = evalExpr(applyR(x) - x, Model::Iterated, Scheme::Momentum);
    CHECK(d.coefficient(-2).isZero());
    CHECK(d.coefficient(-1) == L());
}

TEST_CASE("momentum counterterms are independent of the scale") {
    for (const auto &w : enumerateWordsUpTo(4, kTwo)) {
        Expr z = antipode(applyR(toExpr(w)));
        for (Model m : {Model::Iterated, Model::Propagator})
            CHECK(lFree(evalExpr(z, m, Scheme::Momentum)));
    }
}

TEST_CASE("MS counterterms are local") {
    for (const auto &w : enumerateWordsUpTo(4, kTwo)) {
        Expr z = antipode(applyR(toExpr(w)));
        for (Model m : {Model::Iterated, Model::Propagator}) {
            EpsSeries s = evalExpr(z, m, Scheme::MS);
            CHECK_MESSAGE(lFree(polePart(s)), w.render());
        }
    }
}

TEST_CASE("MS breaks the coassociativity condition") {
    Alphabet a = two();
    Expr lhs = toExpr(parseMonomial("R[R[(x1)](x1)]", a));
    Expr rhs = toExpr(parseMonomial("R[(x1)(x1)]", a));
    EpsSeries d = evalExpr(lhs - rhs, Model::Iterated, Scheme::MS);
    CHECK(d.coefficient(-2).isZero());
    CHECK(d.coefficient(-1) == L());
    CHECK(evalExprExact(lhs - rhs, Model::Iterated, Scheme::Momentum).isZero());
    CHECK(evalExprExact(lhs - rhs, Model::Propagator, Scheme::Momentum).isZero());
}

TEST_CASE("factorization of the nested propagator value") {
    for (auto [j1, j2] : {std::pair{1, 1}, std::pair{1, 2}, std::pair{2, 1}}) {
        Word nested(Ipw(letter(j2), {Ipw(letter(j1))}));
        ScaledSum outer = evalWord(Word(Ipw(letter(j1 + j2))), Model::Propagator);
        ScaledSum inner = applyScheme(evalWord(Word(Ipw(letter(j1))), Model::Propagator), Scheme::Momentum);
        EpsSeries lhs = expand(evalWord(nested, Model::Propagator), {-2, 2});
        EpsSeries rhs = expand(outer * inner, {-2, 2});
        CHECK(equivalent(lhs, rhs));
        CHECK_FALSE(lhs == rhs);
    }
}

TEST_CASE("nested and disjoint words are not equivalent") {
    Alphabet a = Alphabet::open();
    EpsSeries nested = expand(evalWord(parseWord("(((x)x)x)", a), Model::Iterated), {-3, 1});
    EpsSeries disjoint = expand(evalWord(parseWord("((x)(x)x)", a), Model::Iterated), {-3, 1});
    CHECK(nested.coefficient(-3) == CoeffPoly(makeRational(1, 6)));
    CHECK(disjoint.coefficient(-3) == CoeffPoly(makeRational(1, 3)));
    CHECK_FALSE(equivalent(nested, disjoint));
}

TEST_CASE("bar map closed forms") {
    // (x_j): (c^(-j eps) - 1) / (j eps)
    for (long j : {1, 2}) {
        ScaledSum expected = ScaledSum::term({0, j}, Prefactor(inv(j, 1))) +
                             ScaledSum::term({0, 0}, Prefactor(-inv(j, 1)));
        CHECK(barEval(Word(Ipw(letter(static_cast<int>(j))))) == expected);
    }
    // -(1/(2 eps^2)) [ (1-c^-e)/e - (1-c^-2e)/(2e) - (1-c^-3e)/(3e) + (1-c^-4e)/(4e) ]
    ScaledSum closed;
    const std::vector<std::pair<long, long>> parts{{1, 1}, {2, -1}, {3, -1}, {4, 1}};
    for (auto [m, sign] : parts) {
        RationalFunction f = RationalFunction(makeRational(-sign, 2)) * inv(1, 2) * inv(m, 1);
        closed += ScaledSum::term({0, 0}, Prefactor(f));
        closed += ScaledSum::term({0, m}, Prefactor(-f));
    }
    Word w = W("((x1)(x2)x1)");
    CHECK(barEval(w) == closed);
    CHECK(evalExprExact(renormalize(w), Model::Iterated, Scheme::Momentum) == closed);
    CHECK(barEval(Word()) == ScaledSum::one());
}

TEST_CASE("bar map at eps = 0 against quadrature") {
    Word w = W("((x1)(x2)x1)");
    auto r = numericBarOracle(w, 0.0, 2.0);
    const double l = std::log(2.0);
    CHECK(r.value == doctest::Approx(-l * l * l / 3).epsilon(1e-9));
    EpsSeries s = expand(barEval(w), {-3, 0});
    CHECK(isFinite(s));
    CHECK(s.coefficient(0).evaluate(2.0, l) == doctest::Approx(r.value).epsilon(1e-9));
    CHECK(numericBarOracle(w, 0.05, 2.0).value == doctest::Approx(barEval(w)(0.05, 2.0)).epsilon(1e-8));
}

TEST_CASE("bar map equals momentum renormalization up to length 4") {
    for (const auto &w : enumerateWordsUpTo(4, kTwo)) {
        ScaledSum r = evalExprExact(renormalize(w), Model::Iterated, Scheme::Momentum);
        CHECK_MESSAGE(r == barEval(w), w.render());
    }
}

TEST_CASE("overlap resolution") {
    Alphabet a = overlapAlphabet({1, 2});
    Expr x = resolveOverlap(1, 2);
    CHECK(x == toExpr(parseWord("((I1)J2)", a)) + toExpr(parseWord("((I2)J1)", a)));
    CHECK(resolveOverlap(1, 1) == Rational(2) * toExpr(parseWord("((I1)J1)", a)));
    for (auto [j1, j2] : {std::pair{1, 1}, std::pair{1, 2}}) {
        EpsSeries s = evalExpr(renormalize(resolveOverlap(j1, j2)), Model::Propagator, Scheme::Momentum, {-2, 1});
        CHECK(isFinite(s));
    }
}
