#include "renorm/series.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace renorm {

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(Rational constant) {
    c_.push_back(constant);
    trim();
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::linear(const Rational &a, const Rational &b) { return Polynomial(std::vector<Rational>{a, b}); }

void Polynomial::trim() {
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

int Polynomial::valuation() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0)
            return static_cast<int>(i);
    return 0;
}

Rational Polynomial::coefficient(int k) const {
    return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : Rational(0);
}

double Polynomial::operator()(double eps) const {
    double v = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        v = v * eps + it->get_d();
    return v;
}

std::string Polynomial::toString() const {
    if (c_.empty())
        return "0";
    std::string s;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0)
            continue;
        if (!s.empty())
            s += c_[i] < 0 ? " - " : " + ";
        else if (c_[i] < 0)
            s += "-";
        Rational mag = abs(c_[i]);
        if (i == 0 || mag != 1)
            s += renorm::toString(mag) + (i ? "*" : "");
        if (i == 1)
            s += "eps";
        else if (i > 1)
            s += "eps^" + std::to_string(i);
    }
    return s;
}

Polynomial operator+(const Polynomial &a, const Polynomial &b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = a.coefficient(static_cast<int>(i)) + b.coefficient(static_cast<int>(i));
    return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial &a) {
    Polynomial out = a;
    for (auto &q : out.c_)
        q = -q;
    return out;
}

Polynomial operator-(const Polynomial &a, const Polynomial &b) { return a + (-b); }

Polynomial operator*(const Polynomial &a, const Polynomial &b) {
    if (a.isZero() || b.isZero())
        return {};
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            c[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(c));
}

void Polynomial::divmod(const Polynomial &a, const Polynomial &b, Polynomial &q, Polynomial &r) {
    if (b.isZero())
        throw std::domain_error("polynomial division by zero");
    std::vector<Rational> quot(std::max(0, a.degree() - b.degree() + 1));
    std::vector<Rational> rem = a.c_;
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
        Rational f = rem[k + b.degree()] / b.leading();
        quot[k] = f;
        if (f == 0)
            continue;
        for (int i = 0; i <= b.degree(); ++i)
            rem[k + i] -= f * b.c_[i];
    }
    q = Polynomial(std::move(quot));
    r = Polynomial(std::move(rem));
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
    while (!b.isZero()) {
        Polynomial q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.isZero())
        return a;
    Rational lead = a.leading();
    for (auto &x : a.c_)
        x /= lead;
    return a;
}

Polynomial Polynomial::shiftDown(int k) const {
    if (k > valuation() && !isZero())
        throw std::logic_error("shiftDown beyond the valuation");
    return Polynomial(std::vector<Rational>(c_.begin() + std::min<std::size_t>(k, c_.size()), c_.end()));
}

// ---------------------------------------------------------------------------
// RationalFunction

RationalFunction::RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.isZero())
        throw std::domain_error("rational function with zero denominator");
    normalize();
}

void RationalFunction::normalize() {
    if (num_.isZero()) {
        den_ = Polynomial(Rational(1));
        return;
    }
    Polynomial g = Polynomial::gcd(num_, den_);
    if (g.degree() > 0) {
        Polynomial q, r;
        Polynomial::divmod(num_, g, q, r);
        num_ = q;
        Polynomial::divmod(den_, g, q, r);
        den_ = q;
    }
    Rational lead = den_.leading();
    if (lead != 1) {
        num_ = num_ * Polynomial(Rational(1 / lead));
        den_ = den_ * Polynomial(Rational(1 / lead));
    }
}

std::string RationalFunction::toString() const {
    auto group = [](const Polynomial &p) {
        const std::string t = p.toString();
        return t.find_first_of("+ /") == std::string::npos ? t : "(" + t + ")";
    };
    if (den_.degree() == 0)
        return num_.toString();
    return group(num_) + "/" + group(den_);
}

std::vector<Rational> RationalFunction::laurent(int maxPower, int &poleOrder) const {
    poleOrder = den_.valuation() - num_.valuation();
    if (num_.isZero()) {
        poleOrder = 0;
        return {};
    }
    const int count = poleOrder + maxPower + 1;
    if (count <= 0)
        return {};
    Polynomial n = num_.shiftDown(num_.valuation());
    Polynomial d = den_.shiftDown(den_.valuation());
    std::vector<Rational> s(count);
    const Rational d0 = d.coefficient(0);
    for (int i = 0; i < count; ++i) {
        Rational acc = n.coefficient(i);
        for (int j = 1; j <= std::min(i, d.degree()); ++j)
            acc -= d.coefficient(j) * s[i - j];
        s[i] = acc / d0;
    }
    return s;
}

RationalFunction operator+(const RationalFunction &a, const RationalFunction &b) {
    if (a.den_ == b.den_)
        return RationalFunction(a.num_ + b.num_, a.den_);
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction &a) {
    RationalFunction out = a;
    out.num_ = -out.num_;
    return out;
}

RationalFunction operator-(const RationalFunction &a, const RationalFunction &b) { return a + (-b); }

RationalFunction operator*(const RationalFunction &a, const RationalFunction &b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction &a, const RationalFunction &b) {
    if (b.isZero())
        throw std::domain_error("division by the zero rational function");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

// ---------------------------------------------------------------------------
// Symbols and the coefficient ring

namespace sym {

std::string name(int index) {
    switch (index) {
    case c:
        return "c";
    case L:
        return "L";
    case gammaE:
        return "gammaE";
    case zeta2:
        return "zeta2";
    default:
        return "zeta" + std::to_string(3 + 2 * (index - 4));
    }
}

int index(std::string_view n) {
    if (n == "c")
        return c;
    if (n == "L")
        return L;
    if (n == "gammaE")
        return gammaE;
    if (n == "zeta2")
        return zeta2;
    if (n.size() > 4 && n.substr(0, 4) == "zeta") {
        int k = 0;
        for (char ch : n.substr(4)) {
            if (!std::isdigit(static_cast<unsigned char>(ch)))
                return -1;
            k = 10 * k + (ch - '0');
        }
        if (k >= 3 && k % 2 == 1)
            return zetaOdd(k);
    }
    return -1;
}

} // namespace sym

Rational bernoulli(int n) {
    std::vector<Rational> b(n + 1);
    b[0] = 1;
    for (int m = 1; m <= n; ++m) {
        Rational acc = 0;
        mpz_class binom = 1; // C(m+1, j)
        for (int j = 0; j < m; ++j) {
            acc += Rational(binom) * b[j];
            binom = binom * (m + 1 - j) / (j + 1);
        }
        b[m] = -acc / Rational(m + 1);
    }
    return b[n];
}

CoeffPoly::CoeffPoly(Rational q) { terms_.add(Exponents{}, q); }

CoeffPoly CoeffPoly::symbol(int index, int power) {
    CoeffPoly p;
    Exponents e(index + 1, 0);
    e[index] = power;
    p.terms_.add(power == 0 ? Exponents{} : e, 1);
    return p;
}

CoeffPoly CoeffPoly::zeta(int n) {
    if (n < 2)
        throw std::invalid_argument("zeta(n) needs n >= 2");
    if (n % 2 == 1)
        return symbol(sym::zetaOdd(n));
    const int k = n / 2;
    mpz_class fact = 1;
    for (int i = 2; i <= n; ++i)
        fact *= i;
    mpz_class pow24 = 1;
    for (int i = 0; i < k; ++i)
        pow24 *= 24;
    Rational q = bernoulli(n) * Rational(pow24) / Rational(2 * fact);
    if (k % 2 == 0)
        q = -q;
    CoeffPoly out = symbol(sym::zeta2, k);
    return CoeffPoly(q) * out;
}

bool CoeffPoly::isConstant() const {
    return terms_.isZero() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational CoeffPoly::constant() const { return terms_.coefficient(Exponents{}); }

bool CoeffPoly::dependsOn(int symbol) const {
    for (const auto &[e, q] : terms_)
        if (static_cast<int>(e.size()) > symbol && e[symbol] != 0)
            return true;
    return false;
}

CoeffPoly CoeffPoly::withoutSymbol(int symbol) const {
    CoeffPoly out;
    for (const auto &[e, q] : terms_)
        if (static_cast<int>(e.size()) <= symbol || e[symbol] == 0)
            out.terms_.add(e, q);
    return out;
}

double CoeffPoly::evaluate(double c, double L) const {
    auto value = [&](int i) {
        switch (i) {
        case sym::c:
            return c;
        case sym::L:
            return L;
        case sym::gammaE:
            return std::numbers::egamma;
        case sym::zeta2:
            return std::numbers::pi * std::numbers::pi / 6;
        default:
            return std::riemann_zeta(3.0 + 2 * (i - 4));
        }
    };
    double total = 0;
    for (const auto &[e, q] : terms_) {
        double t = q.get_d();
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i])
                t *= std::pow(value(static_cast<int>(i)), e[i]);
        total += t;
    }
    return total;
}

std::string CoeffPoly::toString() const {
    if (terms_.isZero())
        return "0";
    std::string s;
    for (const auto &[e, q] : terms_) {
        if (!s.empty())
            s += q < 0 ? " - " : " + ";
        else if (q < 0)
            s += "-";
        Rational mag = abs(q);
        std::string factors;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (!e[i])
                continue;
            if (!factors.empty())
                factors += "*";
            factors += sym::name(static_cast<int>(i));
            if (e[i] != 1)
                factors += "^" + std::to_string(e[i]);
        }
        if (factors.empty())
            s += renorm::toString(mag);
        else if (mag == 1)
            s += factors;
        else
            s += renorm::toString(mag) + "*" + factors;
    }
    return s;
}

CoeffPoly &CoeffPoly::operator+=(const CoeffPoly &o) {
    terms_ += o.terms_;
    return *this;
}

CoeffPoly &CoeffPoly::operator-=(const CoeffPoly &o) {
    terms_ -= o.terms_;
    return *this;
}

CoeffPoly operator-(const CoeffPoly &a) {
    CoeffPoly out;
    out.terms_ = -a.terms_;
    return out;
}

CoeffPoly operator*(const CoeffPoly &a, const CoeffPoly &b) {
    CoeffPoly out;
    for (const auto &[ea, qa] : a.terms_)
        for (const auto &[eb, qb] : b.terms_) {
            CoeffPoly::Exponents e(std::max(ea.size(), eb.size()), 0);
            for (std::size_t i = 0; i < ea.size(); ++i)
                e[i] += ea[i];
            for (std::size_t i = 0; i < eb.size(); ++i)
                e[i] += eb[i];
            while (!e.empty() && e.back() == 0)
                e.pop_back();
            out.terms_.add(e, qa * qb);
        }
    return out;
}

CoeffPoly parseCoeffPoly(std::string_view text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch)))
            s += ch;
    auto bad = [&] { return std::invalid_argument("invalid coefficient polynomial '" + std::string(text) + "'"); };
    if (s.empty())
        throw bad();
    CoeffPoly out;
    std::size_t i = 0;
    while (i < s.size()) {
        Rational sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (i != 0) {
            throw bad();
        }
        std::size_t end = i;
        while (end < s.size() && s[end] != '+' && s[end] != '-')
            ++end;
        // a '-' directly after '^' belongs to a negative exponent
        while (end < s.size() && s[end] == '-' && s[end - 1] == '^') {
            ++end;
            while (end < s.size() && s[end] != '+' && s[end] != '-')
                ++end;
        }
        std::string term = s.substr(i, end - i);
        if (term.empty())
            throw bad();
        CoeffPoly t(sign);
        std::size_t p = 0;
        while (p <= term.size()) {
            std::size_t star = term.find('*', p);
            std::string f = term.substr(p, star == std::string::npos ? std::string::npos : star - p);
            if (f.empty())
                throw bad();
            if (std::isdigit(static_cast<unsigned char>(f[0]))) {
                t = t * CoeffPoly(parseRational(f));
            } else {
                std::size_t caret = f.find('^');
                int idx = sym::index(f.substr(0, caret));
                if (idx < 0)
                    throw bad();
                int power = 1;
                if (caret != std::string::npos) {
                    try {
                        power = std::stoi(f.substr(caret + 1));
                    } catch (const std::exception &) {
                        throw bad();
                    }
                }
                t = t * CoeffPoly::symbol(idx, power);
            }
            if (star == std::string::npos)
                break;
            p = star + 1;
        }
        out += t;
        i = end;
    }
    return out;
}

// ---------------------------------------------------------------------------
// EpsSeries

EpsSeries::EpsSeries(int lo, int hi) : lo_(lo), hi_(std::min(hi, kExact)) {
    if (lo > hi + 1)
        throw std::invalid_argument("series window with lo > hi + 1");
}

EpsSeries EpsSeries::constant(const CoeffPoly &c, int hi) {
    EpsSeries s(0, hi);
    s.add(0, c);
    return s;
}

CoeffPoly EpsSeries::coefficient(int k) const {
    if (k > hi_)
        throw std::out_of_range("eps^" + std::to_string(k) + " lies above the known window");
    auto it = coeffs_.find(k);
    return it == coeffs_.end() ? CoeffPoly{} : it->second;
}

void EpsSeries::add(int k, const CoeffPoly &c) {
    if (k > hi_ || c.isZero())
        return;
    if (k < lo_)
        throw std::logic_error("coefficient below the series window");
    auto [it, inserted] = coeffs_.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.isZero())
            coeffs_.erase(it);
    }
}

EpsSeries EpsSeries::clipped(int lo, int hi) const {
    for (const auto &[k, c] : coeffs_)
        if (k < lo)
            throw WindowError("eps^" + std::to_string(k) + " is nonzero below the requested window");
    EpsSeries out(lo, std::min(hi, hi_));
    for (const auto &[k, c] : coeffs_)
        out.add(k, c);
    return out;
}

EpsSeries EpsSeries::polePart() const {
    if (hi_ < -1)
        throw WindowError("series known only up to eps^" + std::to_string(hi_) + "; pole part uncertified");
    EpsSeries out(std::min(lo_, 0), kExact);
    for (const auto &[k, c] : coeffs_)
        if (k < 0)
            out.add(k, c);
    return out;
}

double EpsSeries::evaluate(double eps, double c) const {
    double total = 0;
    for (const auto &[k, coef] : coeffs_)
        total += coef.evaluate(c, std::log(c)) * std::pow(eps, k);
    return total;
}

EpsSeries operator+(const EpsSeries &a, const EpsSeries &b) {
    EpsSeries out(std::min(a.lo_, b.lo_), std::min(a.hi_, b.hi_));
    for (const auto &[k, c] : a.coeffs_)
        out.add(k, c);
    for (const auto &[k, c] : b.coeffs_)
        out.add(k, c);
    return out;
}

EpsSeries operator*(const Rational &q, const EpsSeries &a) {
    EpsSeries out(a.lo_, a.hi_);
    if (q == 0)
        return out;
    for (const auto &[k, c] : a.coeffs_)
        out.add(k, CoeffPoly(q) * c);
    return out;
}

EpsSeries operator-(const EpsSeries &a, const EpsSeries &b) { return a + Rational(-1) * b; }

EpsSeries operator*(const EpsSeries &a, const EpsSeries &b) {
    const long hi = std::min<long>(static_cast<long>(a.hi_) + b.lo_, static_cast<long>(b.hi_) + a.lo_);
    EpsSeries out(a.lo_ + b.lo_, static_cast<int>(std::min<long>(hi, EpsSeries::kExact)));
    for (const auto &[ka, ca] : a.coeffs_)
        for (const auto &[kb, cb] : b.coeffs_)
            if (ka + kb <= out.hi_)
                out.add(ka + kb, ca * cb);
    return out;
}

std::string EpsSeries::toString() const {
    std::string s;
    for (const auto &[k, c] : coeffs_) {
        if (!s.empty())
            s += " + ";
        s += "(" + c.toString() + ")";
        if (k != 0)
            s += "*eps^" + std::to_string(k);
    }
    if (s.empty())
        s = "0";
    if (hi_ < kExact)
        s += " + O(eps^" + std::to_string(hi_ + 1) + ")";
    return s;
}

EpsSeries polePart(const EpsSeries &s) { return s.polePart(); }

bool isFinite(const EpsSeries &s) { return s.polePart().coeffs().empty(); }

bool equivalent(const EpsSeries &a, const EpsSeries &b) { return isFinite(a - b); }

} // namespace renorm
