#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "renorm/linear.hpp"
#include "renorm/words.hpp"

// The free commutative Q-algebra generated by irreducible words, extended by
// a formal renormalization operator R. Nothing here evaluates R; schemes are
// applied by the toy models.

namespace renorm {

class Monomial;

/// A bare iPW or a formal application R[m] of R to a non-unit monomial.
class Factor {
public:
    static Factor bare(Ipw t);

    bool isWrap() const { return std::holds_alternative<std::shared_ptr<const Monomial>>(body_); }
    const Ipw &ipw() const;
    const Monomial &argument() const;
    const std::string &key() const { return key_; }

    int grade() const;
    std::size_t length() const;

    friend bool operator==(const Factor &a, const Factor &b) { return a.key_ == b.key_; }
    /// R-wrapped factors sort before bare ones, then by canonical text.
    friend bool operator<(const Factor &a, const Factor &b);

private:
    friend class Monomial;
    Factor() = default;

    std::variant<std::shared_ptr<const Monomial>, Ipw> body_;
    std::string key_;
};

/// Commutative product of factors; the empty product is the unit e.
class Monomial {
public:
    Monomial() : key_("e") {}
    explicit Monomial(std::vector<Factor> factors);
    explicit Monomial(const Word &w);
    explicit Monomial(const Ipw &t);

    /// R applied to m. R[e] = e and R[R[x]] = R[x].
    static Monomial wrap(const Monomial &m);

    const std::vector<Factor> &factors() const { return factors_; }
    const std::string &key() const { return key_; }
    bool isUnit() const { return factors_.empty(); }
    /// True when every factor is a bare iPW.
    bool isBare() const;
    /// Bare monomial viewed as a word; throws std::logic_error otherwise.
    Word toWord() const;

    int grade() const;
    std::size_t length() const;

    friend Monomial operator*(const Monomial &a, const Monomial &b);
    friend bool operator==(const Monomial &a, const Monomial &b) { return a.key_ == b.key_; }
    friend bool operator<(const Monomial &a, const Monomial &b) { return a.key_ < b.key_; }

private:
    std::vector<Factor> factors_;
    std::string key_;
};

using Expr = LinearCombination<Monomial>;

template <std::size_t N>
using TensorKey = std::array<Monomial, N>;
template <std::size_t N>
using Tensor = LinearCombination<TensorKey<N>>;
using Tensor2 = Tensor<2>;
using Tensor3 = Tensor<3>;

// -- construction ----------------------------------------------------------

Expr unitExpr();
Expr toExpr(const Word &w);
Expr toExpr(const Ipw &t);
Expr toExpr(const Monomial &m);
Tensor2 tensor(const Monomial &a, const Monomial &b, const Rational &q = 1);

// -- algebra -----------------------------------------------------------------

Expr mul(const Expr &a, const Expr &b);
Expr operator*(const Expr &a, const Expr &b);

/// Coefficient of the unit monomial.
Rational counit(const Expr &a);

/// Linear extension of R.
Expr applyR(const Expr &a);

/// Exhaustive rewrite R[prod R[X_i] prod Y_j] -> R[prod X_i prod Y_j],
/// innermost applications first.
Monomial condRewrite(const Monomial &m);
Expr condRewrite(const Expr &a);
/// Same normal form reached by rewriting the outermost R first; kept as an
/// independent strategy for confluence checks.
Expr condRewriteOutermostFirst(const Expr &a);

/// Deletes every R, leaving the underlying word.
Monomial eraseR(const Monomial &m);
Expr eraseR(const Expr &a);

/// condRewrite followed by splitting R over products of bare iPWs,
/// R[a b] -> R[a] R[b]. This is the normal form of a multiplicative R that
/// satisfies the rewrite condition (the momentum scheme is one).
Expr multiplicativeNormalForm(const Expr &a);

int grade(const Monomial &m);

// -- tensors -----------------------------------------------------------------

template <std::size_t N>
Tensor<N> mul(const Tensor<N> &a, const Tensor<N> &b) {
    Tensor<N> out;
    for (const auto &[ka, qa] : a)
        for (const auto &[kb, qb] : b) {
            TensorKey<N> k;
            for (std::size_t i = 0; i < N; ++i)
                k[i] = ka[i] * kb[i];
            out.add(k, qa * qb);
        }
    return out;
}

/// Applies a linear map to one leg of every term.
template <std::size_t N>
Tensor<N> mapLeg(const Tensor<N> &t, std::size_t leg, const std::function<Expr(const Monomial &)> &f) {
    Tensor<N> out;
    for (const auto &[k, q] : t)
        for (const auto &[m, qm] : f(k[leg])) {
            auto nk = k;
            nk[leg] = m;
            out.add(nk, q * qm);
        }
    return out;
}

/// (id - E.counit) on each selected leg: drops terms with a unit there.
template <std::size_t N>
Tensor<N> killUnitLegs(const Tensor<N> &t, const std::array<bool, N> &legs) {
    Tensor<N> out;
    for (const auto &[k, q] : t) {
        bool keep = true;
        for (std::size_t i = 0; i < N; ++i)
            if (legs[i] && k[i].isUnit())
                keep = false;
        if (keep)
            out.add(k, q);
    }
    return out;
}

/// (id - E.counit) (x) id
Tensor2 projectPL(const Tensor2 &t);
/// id (x) (id - E.counit)
Tensor2 projectPR(const Tensor2 &t);
Tensor2 projectP2(const Tensor2 &t);
Tensor3 projectP3(const Tensor3 &t);

/// m : A (x) A -> A
Expr multiply(const Tensor2 &t);
/// Swaps the legs.
Tensor2 flip(const Tensor2 &t);
/// condRewrite on every leg.
Tensor2 condRewrite(const Tensor2 &t);
/// (counit (x) id) and (id (x) counit).
Expr counitLeft(const Tensor2 &t);
Expr counitRight(const Tensor2 &t);

// -- text --------------------------------------------------------------------

std::string render(const Expr &a);
std::string render(const Tensor2 &t);
std::string render(const Tensor3 &t);
std::string renderTensorKey(const Monomial *legs, std::size_t n);

/// Parses a canonical monomial string such as "R[(x1)(x2)]((x1)x3)" or "e".
Monomial parseMonomial(std::string_view text, const Alphabet &alphabet);

} // namespace renorm
