#include "renorm/checks.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace renorm {

namespace {

const std::vector<std::pair<Suite, std::string>> kSuites{
    {Suite::HopfAxioms, "hopf-axioms"},     {Suite::AntipodeForest, "antipode-forest"},
    {Suite::Coassoc, "coassoc"},            {Suite::Finiteness, "finiteness"},
    {Suite::ModelBTheorem, "model-b-theorem"}, {Suite::Overlap, "overlap"},
};

std::vector<Word> allWords(std::size_t maxLength, const std::vector<Letter> &letters) {
    return enumerateWordsUpTo(maxLength, letters);
}

bool sameCoefficients(const EpsSeries &a, const EpsSeries &b, int lo, int hi) {
    for (int k = lo; k <= hi; ++k)
        if (a.coefficient(k) != b.coefficient(k))
            return false;
    return true;
}

void fail(SuiteReport &r, const std::string &subject, const std::string &detail) {
    r.failures.push_back({subject, detail});
}

// Sum over right legs of the evaluated left legs.
std::map<Monomial, EpsSeries> evaluateLeftLegs(const Tensor2 &t, Model model, Scheme scheme) {
    std::map<Monomial, EpsSeries> out;
    for (const auto &[k, q] : t) {
        const int len = static_cast<int>(k[0].length());
        EpsSeries v = q * evalExpr(toExpr(k[0]), model, scheme, {-len, 0});
        auto it = out.find(k[1]);
        if (it == out.end())
            out.emplace(k[1], v);
        else
            it->second = it->second + v;
    }
    return out;
}

} // namespace

std::string toString(Suite s) {
    for (const auto &[suite, name] : kSuites)
        if (suite == s)
            return name;
    return "?";
}

Suite parseSuite(const std::string &s) {
    for (const auto &[suite, name] : kSuites)
        if (name == s)
            return suite;
    throw std::invalid_argument("unknown suite '" + s + "'");
}

const std::vector<std::string> &suiteNames() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto &[suite, name] : kSuites)
            v.push_back(name);
        return v;
    }();
    return names;
}

std::vector<Word> suiteWords(const SuiteOptions &options) {
    std::vector<Letter> letters;
    for (const auto &l : options.letters)
        if (l.degree == 0)
            letters.push_back(l);
    return allWords(options.maxLength, letters);
}

SuiteReport checkHopfAxioms(const SuiteOptions &options) {
    SuiteReport r;
    r.suite = "hopf-axioms";
    for (const auto &w : allWords(options.maxLength, options.letters)) {
        ++r.cases;
        const Expr x = toExpr(w);
        const std::string name = w.render();
        if (w.factors().size() == 1 && coproduct(w) != coproductViaSubwords(w.factors().front()))
            fail(r, name, "recursive coproduct differs from the subword sum");
        const Expr rx = condRewrite(applyR(x));
        if (counitLeft(coproduct(x)) != x)
            fail(r, name, "(e (x) id) Delta != id");
        if (counitLeftImage(x) != rx)
            fail(r, name, "left counit image: " + render(counitLeftImage(x)));
        if (counitRightImage(x) != rx)
            fail(r, name, "right counit image: " + render(counitRightImage(x)));
        if (Tensor2 d = contractedCoassocDefect(x, true); !d.isZero())
            fail(r, name, "coassociativity defect after rewriting: " + render(d));
        if (Tensor3 d = coassocDefect(x, {RBranch::WrapRight}); !d.isZero())
            fail(r, name, "wrap-right coassociativity defect: " + render(d));
    }
    return r;
}

SuiteReport checkAntipodeForest(const SuiteOptions &options) {
    SuiteReport r;
    r.suite = "antipode-forest";
    for (const auto &w : allWords(options.maxLength, options.letters)) {
        ++r.cases;
        const Expr x = toExpr(w);
        const std::string name = w.render();
        const Expr z = forestZ(w);
        const Expr s = antipode(applyR(x));
        if (w.factors().size() == 1 ? z != s : multiplicativeNormalForm(z) != multiplicativeNormalForm(s))
            fail(r, name, "forestZ = " + render(z) + " but S[R[w]] = " + render(s));
        if (multiplicativeNormalForm(antipode(antipode(x))) != x)
            fail(r, name, "S^2 != id in normal form");
    }
    r.notes.push_back("products are compared after multiplicativeNormalForm");
    return r;
}

SuiteReport checkCoassoc(const SuiteOptions &options) {
    SuiteReport r;
    r.suite = "coassoc";
    r.expectViolation = options.scheme == Scheme::MS;
    for (const auto &w : suiteWords(options)) {
        ++r.cases;
        const Expr x = toExpr(w);
        const std::string name = w.render();
        const Tensor2 defect = contractedCoassocDefect(x, false);
        for (const auto &[right, value] : evaluateLeftLegs(defect, options.model, options.scheme)) {
            const EpsSeries poles = polePart(value);
            if (poles.coeffs().empty())
                continue;
            std::string detail = "defect " + render(defect) + " has right leg " + right.key() +
                                 " with pole part " + poles.toString();
            if (r.expectViolation) {
                r.witness = CheckFailure{name, detail};
                r.notes.push_back("the scheme violates the coassociativity condition, as expected");
                return r;
            }
            fail(r, name, detail);
        }
    }
    if (r.expectViolation)
        r.notes.push_back("no violation found up to length " + std::to_string(options.maxLength));
    return r;
}

SuiteReport checkFiniteness(const SuiteOptions &options) {
    SuiteReport r;
    r.suite = "finiteness";
    for (const auto &w : suiteWords(options)) {
        ++r.cases;
        try {
            const EpsSeries s = evalExpr(renormalize(w), options.model, options.scheme);
            if (!isFinite(s))
                fail(r, w.render(), "pole part " + polePart(s).toString());
        } catch (const ModelDomainError &e) {
            fail(r, w.render(), e.what());
        }
    }
    return r;
}

SuiteReport checkModelBTheorem(const SuiteOptions &options) {
    SuiteReport r;
    r.suite = "model-b-theorem";
    if (options.model != Model::Iterated || options.scheme != Scheme::Momentum)
        r.notes.push_back("the statement concerns the iterated model under the momentum scheme");
    for (const auto &w : suiteWords(options)) {
        ++r.cases;
        const Expr x = renormalize(w);
        const ScaledSum bar = barEval(w);
        const std::string name = w.render();
        if (evalExprExact(x, Model::Iterated, Scheme::Momentum) != bar)
            fail(r, name, "exact value differs from the bar integral " + bar.toString());
        const Window window = defaultWindow(x);
        if (!sameCoefficients(evalExpr(x, Model::Iterated, Scheme::Momentum, window), expand(bar, window), window.lo,
                              window.hi))
            fail(r, name, "expansions differ");
    }
    return r;
}

SuiteReport checkOverlap(const SuiteOptions &options) {
    SuiteReport r;
    r.suite = "overlap";
    if (options.model != Model::Propagator)
        r.notes.push_back("overlaps are evaluated in the propagator model");
    for (auto [j1, j2] : {std::pair{1, 1}, std::pair{1, 2}}) {
        ++r.cases;
        const Expr x = resolveOverlap(j1, j2);
        const std::string name = render(x);
        try {
            const EpsSeries s = evalExpr(renormalize(x), Model::Propagator, options.scheme, {-2, 1});
            if (!isFinite(s))
                fail(r, name, "pole part " + polePart(s).toString());
        } catch (const ModelDomainError &e) {
            fail(r, name, e.what());
        }
    }
    return r;
}

SuiteReport runSuite(Suite suite, const SuiteOptions &options) {
    switch (suite) {
    case Suite::HopfAxioms:
        return checkHopfAxioms(options);
    case Suite::AntipodeForest:
        return checkAntipodeForest(options);
    case Suite::Coassoc:
        return checkCoassoc(options);
    case Suite::Finiteness:
        return checkFiniteness(options);
    case Suite::ModelBTheorem:
        return checkModelBTheorem(options);
    case Suite::Overlap:
        return checkOverlap(options);
    }
    throw std::logic_error("unhandled suite");
}

Json toJson(const SuiteReport &r) {
    Json j;
    j["schema"] = kSchema;
    j["kind"] = "check-report";
    j["suite"] = r.suite;
    j["passed"] = r.passed();
    j["cases"] = r.cases;
    j["mode"] = r.expectViolation ? "expect-violation" : "law";
    Json failures = Json::array();
    for (const auto &f : r.failures)
        failures.push_back({{"subject", f.subject}, {"detail", f.detail}});
    j["failures"] = failures;
    if (r.witness)
        j["witness"] = {{"subject", r.witness->subject}, {"detail", r.witness->detail}};
    j["notes"] = r.notes;
    return j;
}

std::string renderReport(const SuiteReport &r) {
    std::ostringstream out;
    out << r.suite << ": " << (r.passed() ? "pass" : "FAIL") << " (" << r.cases << " cases";
    if (r.expectViolation)
        out << ", expect-violation mode";
    out << ")\n";
    if (r.witness)
        out << "  witness " << r.witness->subject << ": " << r.witness->detail << "\n";
    for (const auto &f : r.failures)
        out << "  " << f.subject << ": " << f.detail << "\n";
    for (const auto &n : r.notes)
        out << "  note: " << n << "\n";
    return out.str();
}

} // namespace renorm
