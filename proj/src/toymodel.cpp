#include "renorm/toymodel.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

namespace renorm {

std::string toString(Model m) { return m == Model::Propagator ? "propagator" : "iterated"; }

std::string toString(Scheme s) {
    switch (s) {
    case Scheme::Momentum:
        return "momentum";
    case Scheme::MS:
        return "ms";
    case Scheme::Identity:
        return "identity";
    }
    return "?";
}

Model parseModel(const std::string &s) {
    if (s == "propagator")
        return Model::Propagator;
    if (s == "iterated")
        return Model::Iterated;
    throw std::invalid_argument("unknown model '" + s + "'");
}

Scheme parseScheme(const std::string &s) {
    if (s == "momentum")
        return Scheme::Momentum;
    if (s == "ms")
        return Scheme::MS;
    if (s == "identity")
        return Scheme::Identity;
    throw std::invalid_argument("unknown scheme '" + s + "'");
}

// ---------------------------------------------------------------------------
// Gamma ratios and prefactors

GammaRatio::GammaRatio(Rational x, Rational y) : a(std::min(x, y)), b(std::max(x, y)) {
    if (a == 0 || b == 0)
        throw std::invalid_argument("GammaRatio with a zero argument");
}

double GammaRatio::operator()(double eps) const {
    const double x = a.get_d() * eps, y = b.get_d() * eps;
    return std::tgamma(1 + x) * std::tgamma(1 + y) / std::tgamma(1 + x + y);
}

namespace {

/// Gamma(m + z eps) / Gamma(1 + z eps)
RationalFunction gammaShift(int m, const Rational &z) {
    if (m >= 1) {
        Polynomial p(Rational(1));
        for (int k = 1; k < m; ++k)
            p = p * Polynomial::linear(k, z);
        return RationalFunction(p);
    }
    if (z == 0)
        throw ModelDomainError("Gamma function at the non-positive integer " + std::to_string(m));
    Polynomial p(Rational(1));
    for (int k = m; k <= 0; ++k)
        p = p * Polynomial::linear(k, z);
    return RationalFunction(Polynomial(Rational(1)), p);
}

} // namespace

Prefactor::Prefactor(RationalFunction r, Gammas g) {
    std::sort(g.begin(), g.end());
    add(g, r);
}

Prefactor Prefactor::beta(const BetaFactor &f) {
    RationalFunction r = gammaShift(f.a0, f.a1) * gammaShift(f.b0, f.b1) / gammaShift(f.a0 + f.b0, f.a1 + f.b1);
    Gammas g;
    if (f.a1 != 0 && f.b1 != 0)
        g.emplace_back(f.a1, f.b1);
    return Prefactor(r, g);
}

void Prefactor::add(const Gammas &g, const RationalFunction &r) {
    if (r.isZero())
        return;
    auto [it, inserted] = terms_.try_emplace(g, r);
    if (!inserted) {
        it->second = it->second + r;
        if (it->second.isZero())
            terms_.erase(it);
    }
}

double Prefactor::operator()(double eps) const {
    double total = 0;
    for (const auto &[g, r] : terms_) {
        double t = r(eps);
        for (const auto &x : g)
            t *= x(eps);
        total += t;
    }
    return total;
}

std::string Prefactor::toString() const {
    if (terms_.empty())
        return "0";
    std::string s;
    for (const auto &[g, r] : terms_) {
        if (!s.empty())
            s += " + ";
        s += "(" + r.toString() + ")";
        for (const auto &x : g)
            s += "*G(" + renorm::toString(x.a) + "," + renorm::toString(x.b) + ")";
    }
    return s;
}

Prefactor &Prefactor::operator+=(const Prefactor &o) {
    for (const auto &[g, r] : o.terms_)
        add(g, r);
    return *this;
}

Prefactor operator*(const Prefactor &a, const Prefactor &b) {
    Prefactor out;
    for (const auto &[ga, ra] : a.terms_)
        for (const auto &[gb, rb] : b.terms_) {
            Prefactor::Gammas g = ga;
            g.insert(g.end(), gb.begin(), gb.end());
            std::sort(g.begin(), g.end());
            out.add(g, ra * rb);
        }
    return out;
}

Prefactor operator-(const Prefactor &a) {
    Prefactor out;
    for (const auto &[g, r] : a.terms_)
        out.add(g, -r);
    return out;
}

// ---------------------------------------------------------------------------
// ScaledSum

ScaledSum ScaledSum::one() { return term({0, 0}, Prefactor(RationalFunction(Rational(1)))); }

ScaledSum ScaledSum::term(Scaling s, Prefactor pref) {
    ScaledSum out;
    out.add(s, pref);
    return out;
}

void ScaledSum::add(const Scaling &s, const Prefactor &p) {
    if (p.isZero())
        return;
    auto [it, inserted] = terms_.try_emplace(s, p);
    if (!inserted) {
        it->second += p;
        if (it->second.isZero())
            terms_.erase(it);
    }
}

double ScaledSum::operator()(double eps, double c) const {
    double total = 0;
    for (const auto &[s, p] : terms_)
        total += p(eps) * std::pow(c, s.p - s.n.get_d() * eps);
    return total;
}

std::string ScaledSum::toString() const {
    if (terms_.empty())
        return "0";
    std::string s;
    for (const auto &[k, p] : terms_) {
        if (!s.empty())
            s += " + ";
        s += "[" + p.toString() + "]";
        const Polynomial exponent = Polynomial::linear(k.p, -k.n);
        if (exponent.degree() == 0 && k.p == 1)
            s += "*c";
        else if (!exponent.isZero())
            s += "*c^(" + exponent.toString() + ")";
    }
    return s;
}

ScaledSum &ScaledSum::operator+=(const ScaledSum &o) {
    for (const auto &[s, p] : o.terms_)
        add(s, p);
    return *this;
}

ScaledSum operator*(const Rational &q, const ScaledSum &a) {
    ScaledSum out;
    const Prefactor f{RationalFunction(q)};
    for (const auto &[s, p] : a.terms_)
        out.add(s, f * p);
    return out;
}

ScaledSum operator-(const ScaledSum &a, const ScaledSum &b) { return a + Rational(-1) * b; }

ScaledSum operator*(const ScaledSum &a, const ScaledSum &b) {
    ScaledSum out;
    for (const auto &[sa, pa] : a.terms_)
        for (const auto &[sb, pb] : b.terms_)
            out.add({sa.p + sb.p, sa.n + sb.n}, pa * pb);
    return out;
}

// ---------------------------------------------------------------------------
// Model values

Window defaultWindow(const Expr &a) {
    int bound = 0;
    for (const auto &[m, q] : a)
        bound = std::max(bound, static_cast<int>(m.length()));
    return {-bound, 4};
}

namespace {

RationalFunction inverseLinear(const Rational &m) {
    return RationalFunction(Polynomial(Rational(1)), Polynomial::linear(0, m));
}

ScaledSum nest(const Letter &x, const ScaledSum &content, Model model) {
    ScaledSum out;
    for (const auto &[s, pref] : content.terms()) {
        if (model == Model::Iterated) {
            if (x.degree != 0)
                throw ModelDomainError("iterated model has no linearly divergent letter '" + x.name + "'");
            const Rational m = s.n + x.loops;
            out += ScaledSum::term({0, m}, pref * Prefactor(inverseLinear(m)));
        } else {
            if (s.p >= 1)
                throw ModelDomainError("propagator model: cannot nest a linearly divergent subword under '" + x.name +
                                       "'");
            const BetaFactor b{1 + x.degree, Rational(-x.loops), -s.p - x.degree, s.n + x.loops};
            out += ScaledSum::term({s.p + x.degree, s.n + x.loops}, pref * Prefactor::beta(b));
        }
    }
    return out;
}

class Evaluator {
public:
    explicit Evaluator(Model model) : model_(model) {}

    ScaledSum ipw(const Ipw &t) {
        if (auto it = cache_.find(t.key()); it != cache_.end())
            return it->second;
        ScaledSum content = ScaledSum::one();
        for (const auto &c : t.children())
            content = content * ipw(c);
        ScaledSum out = nest(t.root(), content, model_);
        cache_.emplace(t.key(), out);
        return out;
    }

    ScaledSum monomial(const Monomial &m, Scheme scheme) {
        ScaledSum out = ScaledSum::one();
        for (const auto &f : m.factors())
            out = out * (f.isWrap() ? applyScheme(monomial(f.argument(), scheme), scheme) : ipw(f.ipw()));
        return out;
    }

private:
    Model model_;
    std::map<std::string, ScaledSum> cache_;
};

using Series = std::vector<CoeffPoly>;

Series multiplySeries(const Series &a, const Series &b, int order) {
    Series out(order + 1);
    for (int i = 0; i <= order && i < static_cast<int>(a.size()); ++i) {
        if (a[i].isZero())
            continue;
        for (int j = 0; i + j <= order && j < static_cast<int>(b.size()); ++j)
            if (!b[j].isZero())
                out[i + j] += a[i] * b[j];
    }
    return out;
}

/// exp(l) for a series l without constant term.
Series expSeries(const Series &l, int order) {
    Series e(order + 1);
    e[0] = CoeffPoly(Rational(1));
    for (int n = 1; n <= order; ++n) {
        CoeffPoly acc;
        for (int k = 1; k <= n && k < static_cast<int>(l.size()); ++k)
            if (!l[k].isZero())
                acc += CoeffPoly(Rational(k)) * l[k] * e[n - k];
        e[n] = CoeffPoly(makeRational(1, n)) * acc;
    }
    return e;
}

/// Taylor coefficient of x^n in ln Gamma(1 + x).
CoeffPoly lnGammaCoefficient(int n) {
    if (n == 1)
        return -CoeffPoly::symbol(sym::gammaE);
    CoeffPoly z = CoeffPoly::zeta(n);
    return CoeffPoly(makeRational(n % 2 == 0 ? 1 : -1, n)) * z;
}

class Expander {
public:
    EpsSeries run(const ScaledSum &s, Window window) {
        std::map<int, CoeffPoly> acc;
        int lowest = window.lo;
        for (const auto &[scaling, pref] : s.terms())
            for (const auto &[gammas, r] : pref.terms()) {
                int pole = 0;
                std::vector<Rational> rs = r.laurent(window.hi, pole);
                const int order = pole + window.hi;
                if (order < 0 || rs.empty())
                    continue;
                Series p(order + 1);
                for (int i = 0; i <= order; ++i)
                    p[i] = CoeffPoly(rs[i]);
                for (const auto &g : gammas)
                    p = multiplySeries(p, gamma(g, order), order);
                if (scaling.n != 0)
                    p = multiplySeries(p, scale(scaling.n, order), order);
                const CoeffPoly cp = CoeffPoly::symbol(sym::c, scaling.p);
                for (int i = 0; i <= order; ++i) {
                    if (p[i].isZero())
                        continue;
                    acc[i - pole] += scaling.p ? cp * p[i] : p[i];
                    lowest = std::min(lowest, i - pole);
                }
            }
        EpsSeries out(lowest, window.hi);
        for (const auto &[k, c] : acc)
            out.add(k, c);
        return out.clipped(window.lo, window.hi);
    }

private:
    const Series &gamma(const GammaRatio &g, int order) {
        auto key = std::make_tuple(g.a, g.b, order);
        if (auto it = gammaCache_.find(key); it != gammaCache_.end())
            return it->second;
        Series l(order + 1);
        Rational pa = 1, pb = 1, pab = 1;
        for (int n = 1; n <= order; ++n) {
            pa *= g.a;
            pb *= g.b;
            pab *= g.a + g.b;
            const Rational w = pa + pb - pab;
            if (w != 0)
                l[n] = CoeffPoly(w) * lnGammaCoefficient(n);
        }
        return gammaCache_.emplace(key, expSeries(l, order)).first->second;
    }

    /// c^(-n eps) = exp(-n eps L)
    Series scale(const Rational &n, int order) {
        Series out(order + 1);
        CoeffPoly term(Rational(1));
        const CoeffPoly step = CoeffPoly(Rational(-n)) * CoeffPoly::symbol(sym::L);
        for (int k = 0; k <= order; ++k) {
            out[k] = term;
            term = CoeffPoly(makeRational(1, k + 1)) * step * term;
        }
        return out;
    }

    std::map<std::tuple<Rational, Rational, int>, Series> gammaCache_;
};

int poleBound(const Expr &a) {
    int bound = 0;
    for (const auto &[m, q] : a)
        bound = std::max(bound, static_cast<int>(m.length()));
    return bound;
}

void requireCertified(const Expr &a, Window window) {
    const int bound = poleBound(a);
    if (window.lo > -bound)
        throw WindowError("window starts at eps^" + std::to_string(window.lo) + " but poles up to eps^" +
                          std::to_string(-bound) + " are possible");
}

class SeriesEvaluator {
public:
    SeriesEvaluator(Model model, Scheme scheme) : values_(model), scheme_(scheme) {}

    EpsSeries monomial(const Monomial &m, int hi) {
        const int len = static_cast<int>(m.length());
        EpsSeries out = EpsSeries::constant(CoeffPoly(Rational(1)));
        for (const auto &f : m.factors()) {
            const int flen = static_cast<int>(f.length());
            const int fhi = hi + (len - flen);
            EpsSeries s = f.isWrap() ? applyScheme(monomial(f.argument(), fhi), scheme_)
                                     : expander_.run(values_.ipw(f.ipw()), {-flen, fhi});
            out = out * s;
        }
        return out;
    }

private:
    Evaluator values_;
    Expander expander_;
    Scheme scheme_;
};

} // namespace

ScaledSum evalIpw(const Ipw &t, Model model) { return Evaluator(model).ipw(t); }

ScaledSum evalWord(const Word &w, Model model) {
    Evaluator e(model);
    ScaledSum out = ScaledSum::one();
    for (const auto &t : w.factors())
        out = out * e.ipw(t);
    return out;
}

ScaledSum applyScheme(const ScaledSum &s, Scheme scheme) {
    switch (scheme) {
    case Scheme::Identity:
        return s;
    case Scheme::Momentum: {
        ScaledSum out;
        for (const auto &[k, p] : s.terms())
            out += ScaledSum::term({k.p, 0}, p);
        return out;
    }
    case Scheme::MS:
        break;
    }
    throw std::invalid_argument("the MS scheme acts on expanded series only");
}

EpsSeries applyScheme(const EpsSeries &s, Scheme scheme) {
    switch (scheme) {
    case Scheme::Identity:
        return s;
    case Scheme::Momentum:
        return s.mapCoefficients([](const CoeffPoly &c) { return c.withoutSymbol(sym::L); });
    case Scheme::MS:
        return s.polePart();
    }
    return s;
}

ScaledSum evalExprExact(const Expr &a, Model model, Scheme scheme) {
    if (scheme == Scheme::MS)
        throw std::invalid_argument("the MS scheme has no closed form; use evalExpr");
    Evaluator e(model);
    ScaledSum out;
    for (const auto &[m, q] : a)
        out += q * e.monomial(m, scheme);
    return out;
}

EpsSeries expand(const ScaledSum &s, Window window) { return Expander().run(s, window); }

EpsSeries evalExprBySeries(const Expr &a, Model model, Scheme scheme, Window window) {
    requireCertified(a, window);
    SeriesEvaluator ev(model, scheme);
    EpsSeries out(window.lo, window.hi);
    for (const auto &[m, q] : a)
        out = out + q * ev.monomial(m, window.hi);
    return out.clipped(window.lo, window.hi);
}

EpsSeries evalExpr(const Expr &a, Model model, Scheme scheme, Window window) {
    if (scheme == Scheme::MS)
        return evalExprBySeries(a, model, scheme, window);
    requireCertified(a, window);
    return expand(evalExprExact(a, model, scheme), window);
}

EpsSeries evalExpr(const Expr &a, Model model, Scheme scheme) {
    return evalExpr(a, model, scheme, defaultWindow(a));
}

// ---------------------------------------------------------------------------

namespace {

ScaledSum barIpw(const Ipw &t) {
    if (t.root().degree != 0)
        throw ModelDomainError("barEval needs logarithmic letters; '" + t.root().name + "' is linear");
    ScaledSum content = ScaledSum::one();
    for (const auto &c : t.children())
        content = content * barIpw(c);
    ScaledSum out;
    for (const auto &[s, pref] : content.terms()) {
        const Rational m = s.n + t.root().loops;
        const Prefactor f = pref * Prefactor(inverseLinear(m));
        out += ScaledSum::term({0, m}, f);
        out += ScaledSum::term({0, 0}, -f);
    }
    return out;
}

} // namespace

ScaledSum barEval(const Word &w) {
    ScaledSum out = ScaledSum::one();
    for (const auto &t : w.factors())
        out = out * barIpw(t);
    return out;
}

Letter overlapLetterI(int j) { return Letter{"I" + std::to_string(j), j, 0}; }
Letter overlapLetterJ(int j) { return Letter{"J" + std::to_string(j), j, 1}; }

Alphabet overlapAlphabet(const std::vector<int> &weights) {
    Alphabet a;
    for (int j : weights) {
        if (!a.contains(overlapLetterI(j).name)) {
            a.add(overlapLetterI(j));
            a.add(overlapLetterJ(j));
        }
    }
    return a;
}

Expr resolveOverlap(int j1, int j2) {
    auto nested = [](int i, int j) { return Monomial(Ipw(overlapLetterJ(j), {Ipw(overlapLetterI(i))})); };
    Expr out;
    out.add(nested(j1, j2), 1);
    out.add(nested(j2, j1), 1);
    return out;
}

} // namespace renorm
