#pragma once

#include <random>
#include <string>
#include <vector>

#include <doctest.h>

#include "renorm/algebra.hpp"
#include "renorm/words.hpp"

namespace testsupport {

inline renorm::Alphabet twoLetters() { return renorm::Alphabet({{"x1", 1, 0}, {"x2", 2, 0}}); }
inline renorm::Alphabet oneLetter() { return renorm::Alphabet({{"x1", 1, 0}}); }

/// Letters named i, j, k as in hand-worked examples.
inline renorm::Alphabet ijk() {
    return renorm::Alphabet({{"xi", 1, 0}, {"xj", 1, 0}, {"xk", 1, 0}});
}

inline renorm::Word W(const std::string &text, const renorm::Alphabet &a = ijk()) { return renorm::parseWord(text, a); }
inline renorm::Ipw T(const std::string &text, const renorm::Alphabet &a = ijk()) { return renorm::parseIpw(text, a); }
inline renorm::Monomial M(const std::string &text, const renorm::Alphabet &a = ijk()) {
    return renorm::parseMonomial(text, a);
}

/// Builds an Expr from (coefficient, monomial text) pairs.
inline renorm::Expr E(std::initializer_list<std::pair<long, std::string>> terms,
                      const renorm::Alphabet &a = ijk()) {
    renorm::Expr out;
    for (const auto &[q, m] : terms)
        out.add(M(m, a), q);
    return out;
}

inline renorm::Tensor2 T2(std::initializer_list<std::tuple<long, std::string, std::string>> terms,
                          const renorm::Alphabet &a = ijk()) {
    renorm::Tensor2 out;
    for (const auto &[q, l, r] : terms)
        out.add({M(l, a), M(r, a)}, q);
    return out;
}

/// Random words of length 1..maxLength built by repeated leaf insertion.
class WordGen {
public:
    WordGen(std::uint32_t seed, std::vector<renorm::Letter> letters) : rng_(seed), letters_(std::move(letters)) {}

    renorm::Ipw ipw(std::size_t length) {
        std::uniform_int_distribution<std::size_t> pick(0, letters_.size() - 1);
        renorm::Letter root = letters_[pick(rng_)];
        if (length <= 1)
            return renorm::Ipw(root);
        std::vector<renorm::Ipw> kids;
        std::size_t left = length - 1;
        while (left > 0) {
            std::uniform_int_distribution<std::size_t> sz(1, left);
            std::size_t s = sz(rng_);
            kids.push_back(ipw(s));
            left -= s;
        }
        return renorm::Ipw(root, kids);
    }

    renorm::Word word(std::size_t maxLength) {
        std::uniform_int_distribution<std::size_t> len(1, maxLength);
        std::size_t left = len(rng_);
        std::vector<renorm::Ipw> fs;
        while (left > 0) {
            std::uniform_int_distribution<std::size_t> sz(1, left);
            std::size_t s = sz(rng_);
            fs.push_back(ipw(s));
            left -= s;
        }
        return renorm::Word(fs);
    }

    /// Small random Expr mixing bare words and R applications.
    renorm::Expr expr(std::size_t terms, std::size_t maxLength) {
        renorm::Expr out;
        std::uniform_int_distribution<int> coeff(-3, 3);
        std::bernoulli_distribution wrap(0.3);
        for (std::size_t i = 0; i < terms; ++i) {
            renorm::Monomial m(word(maxLength));
            if (wrap(rng_))
                m = renorm::Monomial::wrap(m) * renorm::Monomial(ipw(1));
            out.add(m, coeff(rng_));
        }
        return out;
    }

    std::mt19937 &rng() { return rng_; }

private:
    std::mt19937 rng_;
    std::vector<renorm::Letter> letters_;
};

} // namespace testsupport

namespace doctest {
template <>
struct StringMaker<renorm::Expr> {
    static String convert(const renorm::Expr &e) { return renorm::render(e).c_str(); }
};
template <>
struct StringMaker<renorm::Tensor2> {
    static String convert(const renorm::Tensor2 &t) { return renorm::render(t).c_str(); }
};
template <>
struct StringMaker<renorm::Tensor3> {
    static String convert(const renorm::Tensor3 &t) { return renorm::render(t).c_str(); }
};
} // namespace doctest
