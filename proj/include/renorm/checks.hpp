#pragma once

#include <optional>
#include <string>
#include <vector>

#include "renorm/serialize.hpp"

// Invariant suites over all words up to a given length, shared by the CLI
// and the acceptance runner.

namespace renorm {

enum class Suite { HopfAxioms, AntipodeForest, Coassoc, Finiteness, ModelBTheorem, Overlap };

std::string toString(Suite s);
/// "hopf-axioms", "antipode-forest", "coassoc", "finiteness",
/// "model-b-theorem", "overlap".
Suite parseSuite(const std::string &s);
const std::vector<std::string> &suiteNames();

struct SuiteOptions {
    std::size_t maxLength = 5;
    Model model = Model::Iterated;
    Scheme scheme = Scheme::Momentum;
    /// Letters to enumerate over.
    std::vector<Letter> letters{{"x1", 1, 0}, {"x2", 2, 0}};
};

struct CheckFailure {
    std::string subject;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::size_t cases = 0;
    std::vector<CheckFailure> failures;
    /// Set when the suite looks for a violation instead of certifying a law.
    bool expectViolation = false;
    std::optional<CheckFailure> witness;
    std::vector<std::string> notes;

    bool passed() const { return expectViolation ? witness.has_value() : failures.empty(); }
};

/// Runs one suite. The coassoc suite under MS switches to expect-violation
/// mode and passes iff it finds a witness.
SuiteReport runSuite(Suite suite, const SuiteOptions &options);

Json toJson(const SuiteReport &r);
std::string renderReport(const SuiteReport &r);

// Individual suites.

/// Recursive coproduct against the subword form, counit laws, formal
/// coassociativity after rewriting, and the wrap-right branch.
SuiteReport checkHopfAxioms(const SuiteOptions &options);
/// forestZ(w) against antipode(applyR(w)), exact on irreducible words and
/// in multiplicative normal form on products; S^2 = id in normal form.
SuiteReport checkAntipodeForest(const SuiteOptions &options);
/// Evaluates the contracted coassociativity defect under the scheme: every
/// right leg must carry a left-leg value with vanishing pole part.
SuiteReport checkCoassoc(const SuiteOptions &options);
/// Pole-freeness of renormalize(w) under the model and scheme.
SuiteReport checkFiniteness(const SuiteOptions &options);
/// Iterated model, momentum scheme: renormalize(w) equals barEval(w), both
/// exactly and as expanded series.
SuiteReport checkModelBTheorem(const SuiteOptions &options);
/// Renormalized resolved overlaps are pole-free in the propagator model.
SuiteReport checkOverlap(const SuiteOptions &options);

/// Words up to maxLength over the letters whose degree the model accepts.
std::vector<Word> suiteWords(const SuiteOptions &options);

} // namespace renorm
