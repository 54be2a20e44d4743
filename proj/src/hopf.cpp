#include "renorm/hopf.hpp"

#include <map>
#include <stdexcept>

namespace renorm {

namespace {

Monomial single(const Factor &f) { return Monomial(std::vector<Factor>{f}); }

Tensor2 unitTensor() { return tensor(Monomial{}, Monomial{}); }

/// R applied separately to every factor of m.
Monomial wrapEachFactor(const Monomial &m) {
    Monomial out;
    for (const auto &f : m.factors())
        out = out * Monomial::wrap(single(f));
    return out;
}

class CoproductEngine {
public:
    CoproductEngine(const CoproductOptions &options, Trace *trace) : options_(options), trace_(trace) {}

    Tensor2 of(const Expr &a) {
        Tensor2 out;
        for (const auto &[m, q] : a)
            out.add(ofMonomial(m), q);
        return out;
    }

    Tensor2 ofMonomial(const Monomial &m) {
        Tensor2 out = unitTensor();
        for (const auto &f : m.factors())
            out = mul<2>(out, ofFactor(f));
        return out;
    }

private:
    Tensor2 ofFactor(const Factor &f) {
        if (!f.isWrap())
            return ofIpw(f.ipw());
        Tensor2 inner = ofMonomial(f.argument());
        if (options_.rBranch == RBranch::Forget) {
            record("R-forget", f.key(), inner);
            return inner;
        }
        Tensor2 out;
        for (const auto &[k, q] : inner)
            out.add({k[0], wrapEachFactor(k[1])}, q);
        record("R-wrap-right", f.key(), out);
        return out;
    }

    Tensor2 ofIpw(const Ipw &t) {
        if (auto it = cache_.find(t.key()); it != cache_.end())
            return it->second;
        const Monomial whole(t);
        Tensor2 out = tensor(Monomial::wrap(whole), Monomial{}) + tensor(Monomial{}, whole);
        if (t.isPrimitive()) {
            record("primitive", t.key(), out);
        } else {
            Tensor2 sub = ofMonomial(Monomial(Word(t.children())));
            out += graft(t.root(), projectPL(sub));
            record("graft", t.key(), out);
        }
        cache_.emplace(t.key(), out);
        return out;
    }

    void record(const std::string &rule, const std::string &input, const Tensor2 &output) {
        if (trace_)
            trace_->push_back({rule, input, render(output)});
    }

    CoproductOptions options_;
    Trace *trace_;
    std::map<std::string, Tensor2> cache_;
};

class AntipodeEngine {
public:
    Expr of(const Expr &a) {
        Expr out;
        for (const auto &[m, q] : a)
            out.add(ofMonomial(m), q);
        return out;
    }

    Expr ofMonomial(const Monomial &m) {
        Expr out = unitExpr();
        for (const auto &f : m.factors())
            out = out * ofFactor(f);
        return out;
    }

private:
    Expr ofFactor(const Factor &f) {
        if (auto it = cache_.find(f.key()); it != cache_.end())
            return it->second;
        Expr out;
        if (!f.isWrap()) {
            const Monomial t = single(f);
            out.add(t, -1);
            for (const auto &[k, q] : projectP2(coproducts_.ofMonomial(t)))
                out.add(toExpr(k[0]) * ofMonomial(k[1]), -q);
        } else {
            const Monomial &m = f.argument();
            Expr inner = toExpr(m);
            for (const auto &[k, q] : projectP2(coproducts_.ofMonomial(m)))
                inner.add(ofMonomial(k[0]) * toExpr(k[1]), q);
            out = -applyR(inner);
        }
        cache_.emplace(f.key(), out);
        return out;
    }

    CoproductEngine coproducts_{CoproductOptions{}, nullptr};
    std::map<std::string, Expr> cache_;
};

class ForestEngine {
public:
    Expr of(const Ipw &t) {
        if (auto it = cache_.find(t.key()); it != cache_.end())
            return it->second;
        Expr inner = toExpr(t);
        for (const auto &split : properSubwordDecompositions(t)) {
            Expr term = toExpr(split.quotient);
            for (const auto &s : split.sub.factors())
                term = term * of(s);
            inner.add(term, split.multiplicity);
        }
        Expr out = -applyR(inner);
        cache_.emplace(t.key(), out);
        return out;
    }

private:
    std::map<std::string, Expr> cache_;
};

Expr convolveWithAntipode(const Tensor2 &t) {
    AntipodeEngine s;
    Expr out;
    for (const auto &[k, q] : t)
        out.add(s.ofMonomial(k[0]) * toExpr(k[1]), q);
    return out;
}

} // namespace

Tensor2 graft(const Letter &x, const Tensor2 &t) {
    Tensor2 out;
    for (const auto &[k, q] : t) {
        if (!k[1].isBare())
            throw std::logic_error("graft: right leg " + k[1].key() + " carries R");
        out.add({k[0], Monomial(Ipw(x, k[1].toWord().factors()))}, q);
    }
    return out;
}

Tensor2 coproduct(const Expr &a, const CoproductOptions &options, Trace *trace) {
    return CoproductEngine(options, trace).of(a);
}

Tensor2 coproduct(const Word &w, const CoproductOptions &options, Trace *trace) {
    return coproduct(toExpr(w), options, trace);
}

Tensor2 coproductViaSubwords(const Ipw &t) {
    Tensor2 out;
    for (const auto &split : subwordDecompositions(t))
        out.add({wrapEachFactor(Monomial(split.sub)), Monomial(split.quotient)}, split.multiplicity);
    return out;
}

Expr antipode(const Expr &a) { return AntipodeEngine().of(a); }

Expr forestZ(const Ipw &t) { return ForestEngine().of(t); }

Expr forestZ(const Word &w) {
    ForestEngine engine;
    Expr out = unitExpr();
    for (const auto &t : w.factors())
        out = out * engine.of(t);
    return out;
}

Expr renormalize(const Expr &a) { return convolveWithAntipode(coproduct(a)); }
Expr renormalize(const Word &w) { return renormalize(toExpr(w)); }

Expr barR(const Expr &a) { return convolveWithAntipode(projectPR(coproduct(a))); }
Expr barR(const Word &w) { return barR(toExpr(w)); }

Tensor3 coassocDefect(const Expr &a, const CoproductOptions &options) {
    CoproductEngine delta(options, nullptr);
    Tensor3 out;
    for (const auto &[k, q] : delta.of(a)) {
        for (const auto &[l, ql] : delta.ofMonomial(k[0]))
            out.add({l[0], l[1], k[1]}, q * ql);
        for (const auto &[r, qr] : delta.ofMonomial(k[1]))
            out.add({k[0], r[0], r[1]}, -q * qr);
    }
    return out;
}

Tensor2 contractLeftPair(const Tensor3 &t) {
    Tensor2 out;
    for (const auto &[k, q] : t)
        out.add({Monomial::wrap(k[0] * k[1]), k[2]}, q);
    return out;
}

Tensor2 contractedCoassocDefect(const Expr &a, bool rewrite, const CoproductOptions &options) {
    Tensor2 d = contractLeftPair(coassocDefect(a, options));
    return rewrite ? condRewrite(d) : d;
}

Tensor2 cocommDefect(const Expr &a) {
    Tensor2 d = coproduct(a);
    return d - flip(d);
}

Tensor2 reduceUnitLegs(const Tensor2 &t) {
    Tensor2 out;
    for (const auto &[k, q] : t) {
        if (k[0].isUnit())
            out.add({k[0], eraseR(k[1])}, q);
        else if (k[1].isUnit())
            out.add({eraseR(k[0]), k[1]}, q);
        else
            out.add(k, q);
    }
    return out;
}

Expr counitLeftImage(const Expr &a) { return condRewrite(applyR(counitLeft(coproduct(a)))); }

Expr counitRightImage(const Expr &a) { return condRewrite(applyR(counitRight(coproduct(a)))); }

} // namespace renorm
