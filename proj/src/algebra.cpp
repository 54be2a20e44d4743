#include "renorm/algebra.hpp"

#include <cctype>
#include <stdexcept>

namespace renorm {

Rational parseRational(std::string_view text) {
    std::string s(text);
    auto bad = [&] { return std::invalid_argument("invalid rational '" + s + "'"); };
    if (s.empty())
        throw bad();
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    bool digits = false, slash = false;
    for (std::size_t j = i; j < s.size(); ++j) {
        if (std::isdigit(static_cast<unsigned char>(s[j]))) {
            digits = true;
        } else if (s[j] == '/' && !slash && digits && j + 1 < s.size()) {
            slash = true;
            digits = false;
        } else {
            throw bad();
        }
    }
    if (!digits)
        throw bad();
    if (s[0] == '+')
        s.erase(0, 1);
    Rational q;
    if (q.set_str(s, 10) != 0 || q.get_den() == 0)
        throw bad();
    q.canonicalize();
    return q;
}

// ---------------------------------------------------------------------------
// Factor / Monomial

Factor Factor::bare(Ipw t) {
    Factor f;
    f.key_ = t.key();
    f.body_ = std::move(t);
    return f;
}

const Ipw &Factor::ipw() const {
    if (isWrap())
        throw std::logic_error("factor is not a bare iPW");
    return std::get<Ipw>(body_);
}

const Monomial &Factor::argument() const {
    if (!isWrap())
        throw std::logic_error("factor is not an R application");
    return *std::get<std::shared_ptr<const Monomial>>(body_);
}

int Factor::grade() const { return isWrap() ? argument().grade() : ipw().loopOrder(); }

std::size_t Factor::length() const { return isWrap() ? argument().length() : ipw().length(); }

bool operator<(const Factor &a, const Factor &b) {
    if (a.isWrap() != b.isWrap())
        return a.isWrap();
    return a.key_ < b.key_;
}

Monomial::Monomial(std::vector<Factor> factors) : factors_(std::move(factors)) {
    std::sort(factors_.begin(), factors_.end());
    if (factors_.empty()) {
        key_ = "e";
        return;
    }
    for (const auto &f : factors_)
        key_ += f.key();
}

namespace {
std::vector<Factor> bareFactors(const Word &w) {
    std::vector<Factor> fs;
    fs.reserve(w.factors().size());
    for (const auto &t : w.factors())
        fs.push_back(Factor::bare(t));
    return fs;
}
} // namespace

Monomial::Monomial(const Word &w) : Monomial(bareFactors(w)) {}
Monomial::Monomial(const Ipw &t) : Monomial(std::vector<Factor>{Factor::bare(t)}) {}

Monomial Monomial::wrap(const Monomial &m) {
    if (m.isUnit())
        return m;
    if (m.factors_.size() == 1 && m.factors_.front().isWrap())
        return m;
    Factor f;
    f.key_ = "R[" + m.key_ + "]";
    f.body_ = std::make_shared<const Monomial>(m);
    return Monomial(std::vector<Factor>{std::move(f)});
}

bool Monomial::isBare() const {
    return std::none_of(factors_.begin(), factors_.end(), [](const Factor &f) { return f.isWrap(); });
}

Word Monomial::toWord() const {
    std::vector<Ipw> ts;
    for (const auto &f : factors_)
        ts.push_back(f.ipw());
    return Word(std::move(ts));
}

int Monomial::grade() const {
    int g = 0;
    for (const auto &f : factors_)
        g += f.grade();
    return g;
}

std::size_t Monomial::length() const {
    std::size_t n = 0;
    for (const auto &f : factors_)
        n += f.length();
    return n;
}

Monomial operator*(const Monomial &a, const Monomial &b) {
    if (a.isUnit())
        return b;
    if (b.isUnit())
        return a;
    std::vector<Factor> fs = a.factors_;
    fs.insert(fs.end(), b.factors_.begin(), b.factors_.end());
    return Monomial(std::move(fs));
}

// ---------------------------------------------------------------------------
// Construction and algebra operations

Expr unitExpr() { return Expr(Monomial{}); }
Expr toExpr(const Word &w) { return Expr(Monomial(w)); }
Expr toExpr(const Ipw &t) { return Expr(Monomial(t)); }
Expr toExpr(const Monomial &m) { return Expr(m); }

Tensor2 tensor(const Monomial &a, const Monomial &b, const Rational &q) { return Tensor2({a, b}, q); }

Expr mul(const Expr &a, const Expr &b) {
    Expr out;
    for (const auto &[ma, qa] : a)
        for (const auto &[mb, qb] : b)
            out.add(ma * mb, qa * qb);
    return out;
}

Expr operator*(const Expr &a, const Expr &b) { return mul(a, b); }

Rational counit(const Expr &a) { return a.coefficient(Monomial{}); }

Expr applyR(const Expr &a) {
    Expr out;
    for (const auto &[m, q] : a)
        out.add(Monomial::wrap(m), q);
    return out;
}

namespace {

// Product of the bare pieces obtained by removing one level of R from every
// factor of m. Factors of m are assumed to carry only bare arguments.
Monomial stripOneLevel(const Monomial &m) {
    Monomial out;
    for (const auto &f : m.factors())
        out = out * (f.isWrap() ? f.argument() : Monomial(std::vector<Factor>{f}));
    return out;
}

} // namespace

Monomial condRewrite(const Monomial &m) {
    Monomial out;
    for (const auto &f : m.factors()) {
        if (!f.isWrap()) {
            out = out * Monomial(std::vector<Factor>{f});
            continue;
        }
        // Innermost first: normalize the argument, then the arguments of its
        // R factors are bare and one stripping step reaches the normal form.
        out = out * Monomial::wrap(stripOneLevel(condRewrite(f.argument())));
    }
    return out;
}

Expr condRewrite(const Expr &a) {
    Expr out;
    for (const auto &[m, q] : a)
        out.add(condRewrite(m), q);
    return out;
}

namespace {

bool hasWrap(const Monomial &m) {
    return std::any_of(m.factors().begin(), m.factors().end(), [](const Factor &f) { return f.isWrap(); });
}

Monomial rewriteOutermost(const Monomial &m) {
    Monomial out;
    for (const auto &f : m.factors()) {
        if (!f.isWrap()) {
            out = out * Monomial(std::vector<Factor>{f});
            continue;
        }
        Monomial arg = f.argument();
        while (hasWrap(arg)) {
            Monomial next;
            for (const auto &g : arg.factors())
                next = next * (g.isWrap() ? g.argument() : Monomial(std::vector<Factor>{g}));
            arg = next;
        }
        out = out * Monomial::wrap(arg);
    }
    return out;
}

} // namespace

Expr condRewriteOutermostFirst(const Expr &a) {
    Expr out;
    for (const auto &[m, q] : a)
        out.add(rewriteOutermost(m), q);
    return out;
}

Monomial eraseR(const Monomial &m) {
    Monomial out;
    for (const auto &f : m.factors())
        out = out * (f.isWrap() ? eraseR(f.argument()) : Monomial(std::vector<Factor>{f}));
    return out;
}

Expr eraseR(const Expr &a) {
    Expr out;
    for (const auto &[m, q] : a)
        out.add(eraseR(m), q);
    return out;
}

Expr multiplicativeNormalForm(const Expr &a) {
    Expr out;
    for (const auto &[m, q] : a) {
        Monomial split;
        const Monomial normal = condRewrite(m);
        for (const auto &f : normal.factors()) {
            if (!f.isWrap()) {
                split = split * Monomial(std::vector<Factor>{f});
                continue;
            }
            for (const auto &g : f.argument().factors())
                split = split * Monomial::wrap(Monomial(std::vector<Factor>{g}));
        }
        out.add(split, q);
    }
    return out;
}

int grade(const Monomial &m) { return m.grade(); }

// ---------------------------------------------------------------------------
// Tensors

Tensor2 projectPL(const Tensor2 &t) { return killUnitLegs<2>(t, {true, false}); }
Tensor2 projectPR(const Tensor2 &t) { return killUnitLegs<2>(t, {false, true}); }
Tensor2 projectP2(const Tensor2 &t) { return killUnitLegs<2>(t, {true, true}); }
Tensor3 projectP3(const Tensor3 &t) { return killUnitLegs<3>(t, {true, true, true}); }

Expr multiply(const Tensor2 &t) {
    Expr out;
    for (const auto &[k, q] : t)
        out.add(k[0] * k[1], q);
    return out;
}

Tensor2 flip(const Tensor2 &t) {
    Tensor2 out;
    for (const auto &[k, q] : t)
        out.add({k[1], k[0]}, q);
    return out;
}

Tensor2 condRewrite(const Tensor2 &t) {
    Tensor2 out;
    for (const auto &[k, q] : t)
        out.add({condRewrite(k[0]), condRewrite(k[1])}, q);
    return out;
}

Expr counitLeft(const Tensor2 &t) {
    Expr out;
    for (const auto &[k, q] : t)
        if (k[0].isUnit())
            out.add(k[1], q);
    return out;
}

Expr counitRight(const Tensor2 &t) {
    Expr out;
    for (const auto &[k, q] : t)
        if (k[1].isUnit())
            out.add(k[0], q);
    return out;
}

// ---------------------------------------------------------------------------
// Text

namespace {

template <typename Terms, typename KeyText>
std::string renderTerms(const Terms &terms, KeyText keyText) {
    if (terms.empty())
        return "0";
    std::string s;
    bool first = true;
    for (const auto &[k, q] : terms) {
        Rational mag = abs(q);
        if (first)
            s += q < 0 ? "-" : "";
        else
            s += q < 0 ? " - " : " + ";
        if (mag != 1)
            s += toString(mag) + "*";
        s += keyText(k);
        first = false;
    }
    return s;
}

} // namespace

std::string renderTensorKey(const Monomial *legs, std::size_t n) {
    std::string s;
    for (std::size_t i = 0; i < n; ++i) {
        if (i)
            s += " ⊗ ";
        s += legs[i].key();
    }
    return s;
}

std::string render(const Expr &a) {
    return renderTerms(a.terms(), [](const Monomial &m) { return m.key(); });
}

std::string render(const Tensor2 &t) {
    return renderTerms(t.terms(), [](const TensorKey<2> &k) { return renderTensorKey(k.data(), 2); });
}

std::string render(const Tensor3 &t) {
    return renderTerms(t.terms(), [](const TensorKey<3> &k) { return renderTensorKey(k.data(), 3); });
}

// ---------------------------------------------------------------------------
// Monomial parser
//
//   monomial := 'e' | factor+
//   factor   := 'R' '[' monomial ']' | ipw

namespace {

class MonomialParser {
public:
    MonomialParser(std::string_view text, const Alphabet &alphabet) : text_(text), alphabet_(alphabet) {}

    Monomial parseAll() {
        Monomial m = parseMonomial();
        skipSpace();
        if (pos_ != text_.size())
            throw ParseError("unexpected trailing input", pos_);
        return m;
    }

private:
    void skipSpace() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    Monomial parseMonomial() {
        skipSpace();
        if (pos_ < text_.size() && text_[pos_] == 'e') {
            ++pos_;
            return Monomial{};
        }
        Monomial out;
        bool any = false;
        for (;;) {
            skipSpace();
            if (pos_ >= text_.size() || (text_[pos_] != '(' && text_[pos_] != 'R'))
                break;
            any = true;
            if (text_[pos_] == 'R') {
                ++pos_;
                skipSpace();
                if (pos_ >= text_.size() || text_[pos_] != '[')
                    throw ParseError("expected '[' after R", pos_);
                ++pos_;
                Monomial inner = parseMonomial();
                skipSpace();
                if (pos_ >= text_.size() || text_[pos_] != ']')
                    throw ParseError("unbalanced R bracket", pos_);
                ++pos_;
                if (inner.isUnit())
                    throw ParseError("R[e] is not a canonical monomial", pos_);
                out = out * Monomial::wrap(inner);
            } else {
                const std::size_t start = pos_;
                int depthCount = 0;
                do {
                    if (text_[pos_] == '(')
                        ++depthCount;
                    else if (text_[pos_] == ')')
                        --depthCount;
                    ++pos_;
                } while (pos_ < text_.size() && depthCount > 0);
                if (depthCount != 0)
                    throw ParseError("unbalanced bracket", pos_);
                out = out * Monomial(parseIpw(text_.substr(start, pos_ - start), alphabet_));
            }
        }
        if (!any)
            throw ParseError("expected a monomial", pos_);
        return out;
    }

    std::string_view text_;
    const Alphabet &alphabet_;
    std::size_t pos_ = 0;
};

} // namespace

Monomial parseMonomial(std::string_view text, const Alphabet &alphabet) {
    return MonomialParser(text, alphabet).parseAll();
}

} // namespace renorm
