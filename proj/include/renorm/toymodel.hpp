#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "renorm/algebra.hpp"
#include "renorm/series.hpp"

// Words as explicit functions of a scale c in two solvable models.
//
// Iterated:    (X x_j)[c] = int_c^inf dy y^(-1-j eps) X[y]
// Propagator:  (X x_j)[c] = int_0^inf dy y^(d-j eps)/(y+c) X[y+c]
//
// where j is the letter's loop order and d its divergence degree. Every
// value is a finite sum of terms pref(eps) c^(p - n eps).

namespace renorm {

enum class Model { Propagator, Iterated };
enum class Scheme { Momentum, MS, Identity };

std::string toString(Model m);
std::string toString(Scheme s);
/// Accepts "propagator"/"iterated" and "momentum"/"ms"/"identity".
Model parseModel(const std::string &s);
Scheme parseScheme(const std::string &s);

/// Evaluation outside the region where the model integrals converge.
class ModelDomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// B(a0 + a1 eps, b0 + b1 eps)
struct BetaFactor {
    int a0 = 0;
    Rational a1 = 0;
    int b0 = 0;
    Rational b1 = 0;
};

/// G(a, b) = Gamma(1+a eps) Gamma(1+b eps) / Gamma(1+(a+b) eps), a <= b,
/// both nonzero. Beta factors are stored as a rational function times these.
struct GammaRatio {
    Rational a, b;

    GammaRatio(Rational x, Rational y);
    double operator()(double eps) const;
    friend bool operator==(const GammaRatio &, const GammaRatio &) = default;
    friend bool operator<(const GammaRatio &l, const GammaRatio &r) {
        return l.a != r.a ? l.a < r.a : l.b < r.b;
    }
};

/// Sum of rational functions of eps, each multiplying a product of
/// GammaRatio factors (kept sorted).
class Prefactor {
public:
    using Gammas = std::vector<GammaRatio>;

    Prefactor() = default;
    Prefactor(RationalFunction r, Gammas g = {});
    static Prefactor beta(const BetaFactor &b);

    const std::map<Gammas, RationalFunction> &terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }
    double operator()(double eps) const;
    std::string toString() const;

    Prefactor &operator+=(const Prefactor &o);
    friend Prefactor operator+(Prefactor a, const Prefactor &b) { return a += b; }
    friend Prefactor operator*(const Prefactor &a, const Prefactor &b);
    friend Prefactor operator-(const Prefactor &a);
    friend bool operator==(const Prefactor &a, const Prefactor &b) { return a.terms_ == b.terms_; }

private:
    void add(const Gammas &g, const RationalFunction &r);
    std::map<Gammas, RationalFunction> terms_;
};

/// Key (p, n) of a term c^(p - n eps).
struct Scaling {
    int p = 0;
    Rational n = 0;
    friend bool operator==(const Scaling &, const Scaling &) = default;
    friend bool operator<(const Scaling &l, const Scaling &r) { return l.p != r.p ? l.p < r.p : l.n < r.n; }
};

/// sum_t pref_t(eps) c^(p_t - n_t eps), merged by (p, n).
class ScaledSum {
public:
    ScaledSum() = default;
    static ScaledSum one();
    static ScaledSum term(Scaling s, Prefactor pref);

    const std::map<Scaling, Prefactor> &terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }
    double operator()(double eps, double c) const;
    std::string toString() const;

    ScaledSum &operator+=(const ScaledSum &o);
    friend ScaledSum operator+(ScaledSum a, const ScaledSum &b) { return a += b; }
    friend ScaledSum operator-(const ScaledSum &a, const ScaledSum &b);
    friend ScaledSum operator*(const ScaledSum &a, const ScaledSum &b);
    friend ScaledSum operator*(const Rational &q, const ScaledSum &a);
    friend bool operator==(const ScaledSum &a, const ScaledSum &b) { return a.terms_ == b.terms_; }

private:
    void add(const Scaling &s, const Prefactor &p);
    std::map<Scaling, Prefactor> terms_;
};

struct Window {
    int lo = -1;
    int hi = 4;
};

/// [-(maximal monomial length), 4].
Window defaultWindow(const Expr &a);

ScaledSum evalWord(const Word &w, Model model);
ScaledSum evalIpw(const Ipw &t, Model model);

/// Momentum keeps the integer power and drops the eps-dependent scaling,
/// c^(p - n eps) -> c^p. Identity is the identity. MS is not closed on
/// ScaledSums and throws std::invalid_argument.
ScaledSum applyScheme(const ScaledSum &s, Scheme scheme);
/// Series form: Momentum sets L = 0, MS keeps the strict pole part.
EpsSeries applyScheme(const EpsSeries &s, Scheme scheme);

/// Exact value of an Expr; R applications evaluate their argument and apply
/// the scheme. Momentum and Identity only.
ScaledSum evalExprExact(const Expr &a, Model model, Scheme scheme);

/// Laurent expansion in eps within the window. Throws WindowError when a
/// nonzero coefficient lies below window.lo.
EpsSeries expand(const ScaledSum &s, Window window);

/// Expansion of an Expr under any scheme. Throws WindowError unless
/// window.lo reaches the pole bound given by the longest monomial.
EpsSeries evalExpr(const Expr &a, Model model, Scheme scheme, Window window);
EpsSeries evalExpr(const Expr &a, Model model, Scheme scheme);
/// Same value computed factor by factor at the series level, applying the
/// scheme to each R argument's expansion. evalExpr uses this path for MS.
EpsSeries evalExprBySeries(const Expr &a, Model model, Scheme scheme, Window window);

/// Iterated model only: bar[e] = 1 and
///   bar[(X x_j)](c) = -int_1^c dy y^(-1-j eps) bar[X](y),
/// multiplicative over products. Equals the momentum-scheme value of
/// renormalize(w).
ScaledSum barEval(const Word &w);

/// Letters of the overlapping-divergence model: I<j> (degree 0) and J<j>
/// (degree 1), both with loop order j.
Letter overlapLetterI(int j);
Letter overlapLetterJ(int j);
Alphabet overlapAlphabet(const std::vector<int> &weights);
/// ((I_j1) J_j2) + ((I_j2) J_j1)
Expr resolveOverlap(int j1, int j2);

} // namespace renorm
