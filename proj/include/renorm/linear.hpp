#pragma once

#include <cstddef>
#include <map>
#include <utility>

#include "renorm/rational.hpp"

namespace renorm {

/// Finite Q-linear combination of basis elements of type Key.
/// Zero coefficients are never stored, so equality is structural.
template <typename Key>
class LinearCombination {
public:
    using Terms = std::map<Key, Rational>;

    LinearCombination() = default;
    explicit LinearCombination(Key k, Rational q = 1) { add(std::move(k), q); }

    void add(const Key &k, const Rational &q) {
        if (q == 0)
            return;
        auto [it, inserted] = terms_.try_emplace(k, q);
        if (!inserted) {
            it->second += q;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    void add(const LinearCombination &other, const Rational &scale = 1) {
        for (const auto &[k, q] : other.terms_)
            add(k, q * scale);
    }

    Rational coefficient(const Key &k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    bool isZero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const Terms &terms() const { return terms_; }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }

    LinearCombination &operator+=(const LinearCombination &o) {
        add(o);
        return *this;
    }
    LinearCombination &operator-=(const LinearCombination &o) {
        add(o, Rational(-1));
        return *this;
    }
    LinearCombination &operator*=(const Rational &q) {
        if (q == 0) {
            terms_.clear();
            return *this;
        }
        for (auto &[_, c] : terms_)
            c *= q;
        return *this;
    }

    friend LinearCombination operator+(LinearCombination a, const LinearCombination &b) { return a += b; }
    friend LinearCombination operator-(LinearCombination a, const LinearCombination &b) { return a -= b; }
    friend LinearCombination operator-(LinearCombination a) { return a *= Rational(-1); }
    friend LinearCombination operator*(const Rational &q, LinearCombination a) { return a *= q; }
    friend bool operator==(const LinearCombination &a, const LinearCombination &b) { return a.terms_ == b.terms_; }

private:
    Terms terms_;
};

} // namespace renorm
