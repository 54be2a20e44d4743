#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "renorm/linear.hpp"

// Exact arithmetic in the regulator: polynomials and rational functions in
// eps, the symbolic coefficient ring, and truncated Laurent series.

namespace renorm {

/// Polynomial in eps with rational coefficients, lowest power first.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(Rational constant);
    explicit Polynomial(std::vector<Rational> coeffs);
    /// a + b*eps
    static Polynomial linear(const Rational &a, const Rational &b);

    const std::vector<Rational> &coeffs() const { return c_; }
    bool isZero() const { return c_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    /// Lowest power with a nonzero coefficient; 0 for the zero polynomial.
    int valuation() const;
    Rational coefficient(int k) const;
    const Rational &leading() const { return c_.back(); }
    double operator()(double eps) const;
    std::string toString() const;

    friend Polynomial operator+(const Polynomial &a, const Polynomial &b);
    friend Polynomial operator-(const Polynomial &a, const Polynomial &b);
    friend Polynomial operator*(const Polynomial &a, const Polynomial &b);
    friend Polynomial operator-(const Polynomial &a);
    friend bool operator==(const Polynomial &a, const Polynomial &b) { return a.c_ == b.c_; }

    /// Euclidean division; throws std::domain_error when b is zero.
    static void divmod(const Polynomial &a, const Polynomial &b, Polynomial &q, Polynomial &r);
    /// Monic greatest common divisor.
    static Polynomial gcd(Polynomial a, Polynomial b);
    /// Drops the factor eps^k; k must not exceed the valuation.
    Polynomial shiftDown(int k) const;

private:
    void trim();
    std::vector<Rational> c_;
};

/// num/den in lowest terms with a monic denominator.
class RationalFunction {
public:
    RationalFunction() : num_(Rational(0)), den_(Rational(1)) {}
    RationalFunction(Rational q) : num_(q), den_(Rational(1)) {}
    RationalFunction(Polynomial num, Polynomial den = Polynomial(Rational(1)));

    const Polynomial &num() const { return num_; }
    const Polynomial &den() const { return den_; }
    bool isZero() const { return num_.isZero(); }
    double operator()(double eps) const { return num_(eps) / den_(eps); }
    std::string toString() const;

    /// Laurent coefficients: out[i] is the coefficient of eps^(i - poleOrder),
    /// for i = 0 .. poleOrder + maxPower.
    std::vector<Rational> laurent(int maxPower, int &poleOrder) const;

    friend RationalFunction operator+(const RationalFunction &a, const RationalFunction &b);
    friend RationalFunction operator-(const RationalFunction &a, const RationalFunction &b);
    friend RationalFunction operator*(const RationalFunction &a, const RationalFunction &b);
    friend RationalFunction operator/(const RationalFunction &a, const RationalFunction &b);
    friend RationalFunction operator-(const RationalFunction &a);
    friend bool operator==(const RationalFunction &a, const RationalFunction &b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

private:
    void normalize();
    Polynomial num_, den_;
};

/// Symbols of the coefficient ring, in canonical order. Odd zeta values are
/// independent symbols; even ones are rewritten as powers of zeta2.
namespace sym {
constexpr int c = 0;       // the scale, only through integer powers
constexpr int L = 1;       // ln c
constexpr int gammaE = 2;  // Euler-Mascheroni constant
constexpr int zeta2 = 3;
/// Index of zeta(n) for odd n >= 3.
inline int zetaOdd(int n) { return 4 + (n - 3) / 2; }
std::string name(int index);
/// Inverse of name(); -1 for an unknown symbol.
int index(std::string_view name);
} // namespace sym

/// Polynomial over Q in the symbols above. A monomial is its exponent vector
/// without trailing zeros.
class CoeffPoly {
public:
    using Exponents = std::vector<int>;

    CoeffPoly() = default;
    CoeffPoly(Rational q);
    static CoeffPoly symbol(int index, int power = 1);
    /// zeta(n) for n >= 2.
    static CoeffPoly zeta(int n);

    const LinearCombination<Exponents> &terms() const { return terms_; }
    bool isZero() const { return terms_.isZero(); }
    bool isConstant() const;
    Rational constant() const;
    bool dependsOn(int symbol) const;
    /// Sets a symbol to zero.
    CoeffPoly withoutSymbol(int symbol) const;
    double evaluate(double c, double L) const;
    std::string toString() const;

    CoeffPoly &operator+=(const CoeffPoly &o);
    CoeffPoly &operator-=(const CoeffPoly &o);
    friend CoeffPoly operator+(CoeffPoly a, const CoeffPoly &b) { return a += b; }
    friend CoeffPoly operator-(CoeffPoly a, const CoeffPoly &b) { return a -= b; }
    friend CoeffPoly operator-(const CoeffPoly &a);
    friend CoeffPoly operator*(const CoeffPoly &a, const CoeffPoly &b);
    friend bool operator==(const CoeffPoly &a, const CoeffPoly &b) { return a.terms_ == b.terms_; }

private:
    LinearCombination<Exponents> terms_;
};

/// Reads the text produced by CoeffPoly::toString.
CoeffPoly parseCoeffPoly(std::string_view text);

/// Exact Bernoulli number B_n (B_1 = -1/2).
Rational bernoulli(int n);

/// Truncated Laurent series in eps. Every power below `lo` is exactly zero;
/// powers above `hi` are unknown.
class EpsSeries {
public:
    /// hi value meaning "exact to all orders".
    static constexpr int kExact = 1 << 20;

    EpsSeries() = default;
    EpsSeries(int lo, int hi);
    static EpsSeries constant(const CoeffPoly &c, int hi = kExact);

    int lo() const { return lo_; }
    int hi() const { return hi_; }
    const std::map<int, CoeffPoly> &coeffs() const { return coeffs_; }
    /// Coefficient of eps^k; throws std::out_of_range above hi.
    CoeffPoly coefficient(int k) const;
    void add(int k, const CoeffPoly &c);

    /// Narrows the known window; widening is refused.
    EpsSeries clipped(int lo, int hi) const;
    EpsSeries polePart() const;
    /// Applies f to every coefficient.
    template <typename F>
    EpsSeries mapCoefficients(F f) const {
        EpsSeries out(lo_, hi_);
        for (const auto &[k, c] : coeffs_)
            out.add(k, f(c));
        return out;
    }
    double evaluate(double eps, double c) const;

    friend EpsSeries operator+(const EpsSeries &a, const EpsSeries &b);
    friend EpsSeries operator-(const EpsSeries &a, const EpsSeries &b);
    friend EpsSeries operator*(const EpsSeries &a, const EpsSeries &b);
    friend EpsSeries operator*(const Rational &q, const EpsSeries &a);
    friend bool operator==(const EpsSeries &a, const EpsSeries &b) {
        return a.lo_ == b.lo_ && a.hi_ == b.hi_ && a.coeffs_ == b.coeffs_;
    }

    std::string toString() const;

private:
    int lo_ = 0;
    int hi_ = kExact;
    std::map<int, CoeffPoly> coeffs_;
};

/// Thrown when a series window cannot certify the requested statement.
class WindowError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

EpsSeries polePart(const EpsSeries &s);
/// All negative powers vanish; requires hi >= -1.
bool isFinite(const EpsSeries &s);
/// Identical pole parts.
bool equivalent(const EpsSeries &a, const EpsSeries &b);

} // namespace renorm
