#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>

#include "renorm/checks.hpp"
#include "renorm/serialize.hpp"

using namespace renorm;

namespace {

enum class Format { Text, Json, Dot };

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;
constexpr int kDomain = 3;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string alphabetPath;
    Format format = Format::Text;
    std::string model = "iterated";
    std::string scheme = "momentum";
    std::string window;
};

struct Loaded {
    Alphabet alphabet;
    bool custom = false;
};

Loaded loadAlphabetFor(const RunConfig &cfg) {
    std::string path = cfg.alphabetPath;
    if (path.empty())
        if (const char *env = std::getenv("RENORM_ALPHABET"))
            path = env;
    if (!path.empty())
        return {loadAlphabet(path), true};
    // x1 is declared; other well-formed names are accepted with N = 1 and
    // degree 0 so that symbolic letters like xi work out of the box.
    Alphabet a = Alphabet::open();
    a.add({"x1", 1, 0});
    return {a, false};
}

Window parseWindow(const std::string &text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw UsageError("window must be lo:hi, got '" + text + "'");
    try {
        std::size_t used = 0;
        Window w{std::stoi(text.substr(0, colon), &used), 0};
        if (used != colon)
            throw std::invalid_argument(text);
        const std::string hi = text.substr(colon + 1);
        w.hi = std::stoi(hi, &used);
        if (used != hi.size())
            throw std::invalid_argument(text);
        if (w.lo > w.hi)
            throw UsageError("window lo exceeds hi");
        return w;
    } catch (const std::logic_error &) {
        throw UsageError("window must be lo:hi with integers, got '" + text + "'");
    }
}

struct OracleSpec {
    double eps = 0.05;
    double c = 2.0;
};

OracleSpec parseOracleSpec(const std::string &text) {
    OracleSpec spec;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos)
            throw UsageError("oracle parameters look like eps=0.05,c=2");
        const std::string key = item.substr(0, eq);
        double value = 0;
        try {
            value = std::stod(item.substr(eq + 1));
        } catch (const std::logic_error &) {
            throw UsageError("bad oracle value in '" + item + "'");
        }
        if (key == "eps")
            spec.eps = value;
        else if (key == "c")
            spec.c = value;
        else
            throw UsageError("unknown oracle parameter '" + key + "'");
    }
    return spec;
}

// Value of a monomial at (eps, c) by quadrature. Under the momentum scheme
// an R application evaluates its argument at c = 1.
double oracleMonomial(const Monomial &m, Model model, Scheme scheme, double eps, double c) {
    double v = 1;
    std::vector<Ipw> bare;
    for (const auto &f : m.factors()) {
        if (!f.isWrap()) {
            bare.push_back(f.ipw());
            continue;
        }
        if (scheme == Scheme::MS)
            throw UsageError("the quadrature oracle does not implement the MS scheme");
        v *= oracleMonomial(f.argument(), model, scheme, eps, scheme == Scheme::Momentum ? 1.0 : c);
    }
    if (!bare.empty())
        v *= numericOracle(Word(bare), model, eps, c).value;
    return v;
}

void printParseError(const ParseError &e, const std::string &input) {
    std::cerr << "error: " << e.what() << "\n  " << input << "\n  " << std::string(e.column(), ' ') << "^\n";
}

void emit(const Json &j) { std::cout << j.dump(2) << "\n"; }

void requireNotDot(const RunConfig &cfg, const char *command) {
    if (cfg.format == Format::Dot)
        throw UsageError(std::string("--format dot is available for parse and enumerate, not ") + command);
}

int cmdParse(const RunConfig &cfg, const std::string &input) {
    const Word w = parseWord(input, loadAlphabetFor(cfg).alphabet);
    switch (cfg.format) {
    case Format::Json:
        emit(toJson(w));
        break;
    case Format::Dot:
        std::cout << toDot(w);
        break;
    case Format::Text:
        std::cout << "canonical: " << w.render() << "\nlength: " << w.length() << "\ndepth: " << w.depth()
                  << "\nloop order: " << w.loopOrder() << "\n";
    }
    return kOk;
}

int cmdDelta(const RunConfig &cfg, const std::string &input, bool trace, bool wrapRight) {
    requireNotDot(cfg, "delta");
    const Word w = parseWord(input, loadAlphabetFor(cfg).alphabet);
    Trace steps;
    const Tensor2 d = coproduct(w, {wrapRight ? RBranch::WrapRight : RBranch::Forget}, trace ? &steps : nullptr);
    if (cfg.format == Format::Json) {
        emit(trace ? traceToJson(w.render(), steps, d) : toJson(d));
        return kOk;
    }
    for (const auto &s : steps)
        std::cout << "[" << s.rule << "] " << s.input << " -> " << s.output << "\n";
    std::cout << render(d) << "\n";
    return kOk;
}

int printExpr(const RunConfig &cfg, const Expr &x) {
    if (cfg.format == Format::Json)
        emit(toJson(x));
    else
        std::cout << render(x) << "\n";
    return kOk;
}

int cmdAntipode(const RunConfig &cfg, const std::string &input, bool bare, bool normal) {
    requireNotDot(cfg, "antipode");
    const Expr x = toExpr(parseWord(input, loadAlphabetFor(cfg).alphabet));
    Expr s = antipode(bare ? x : applyR(x));
    if (normal)
        s = multiplicativeNormalForm(s);
    return printExpr(cfg, s);
}

int cmdZ(const RunConfig &cfg, const std::string &input) {
    requireNotDot(cfg, "z");
    return printExpr(cfg, forestZ(parseWord(input, loadAlphabetFor(cfg).alphabet)));
}

int cmdRenorm(const RunConfig &cfg, const std::string &input, bool bar) {
    requireNotDot(cfg, "renorm");
    const Word w = parseWord(input, loadAlphabetFor(cfg).alphabet);
    return printExpr(cfg, bar ? barR(w) : renormalize(w));
}

int cmdEval(const RunConfig &cfg, const std::string &input, bool renormalized, bool exact,
            const std::string &oracle) {
    requireNotDot(cfg, "eval");
    const Model model = parseModel(cfg.model);
    const Scheme scheme = parseScheme(cfg.scheme);
    const Word w = parseWord(input, loadAlphabetFor(cfg).alphabet);
    const Expr x = renormalized ? renormalize(w) : toExpr(w);
    const Window window = cfg.window.empty() ? defaultWindow(x) : parseWindow(cfg.window);
    const EpsSeries series = evalExpr(x, model, scheme, window);
    const bool finite = series.hi() >= -1 && isFinite(series);

    std::optional<ScaledSum> closed;
    if (exact || !oracle.empty()) {
        if (scheme == Scheme::MS)
            throw UsageError("--exact and --oracle need a scheme with a closed form (momentum or identity)");
        closed = evalExprExact(x, model, scheme);
    }
    Json oracleJson;
    std::string oracleText;
    if (!oracle.empty()) {
        const OracleSpec spec = parseOracleSpec(oracle);
        double numeric = 0;
        for (const auto &[m, q] : x)
            numeric += q.get_d() * oracleMonomial(m, model, scheme, spec.eps, spec.c);
        const double value = (*closed)(spec.eps, spec.c);
        const double scale = std::max(std::abs(value), 1e-300);
        const double rel = std::abs(numeric - value) / scale;
        const double tolerance = 1e-6;
        oracleJson = {{"eps", spec.eps}, {"c", spec.c},        {"quadrature", numeric},
                      {"closed", value}, {"relative", rel},    {"tolerance", tolerance},
                      {"agree", rel <= tolerance}};
        std::ostringstream s;
        s.precision(15);
        s << "oracle at eps=" << spec.eps << ", c=" << spec.c << ": quadrature " << numeric << ", closed form "
          << value << ", relative difference " << rel << " (tolerance " << tolerance << ")"
          << (rel <= tolerance ? "" : " DISAGREE");
        oracleText = s.str();
    }

    if (cfg.format == Format::Json) {
        Json j;
        j["schema"] = kSchema;
        j["kind"] = "evaluation";
        j["input"] = w.render();
        j["model"] = toString(model);
        j["scheme"] = toString(scheme);
        j["renormalized"] = renormalized;
        j["window"] = {{"lo", window.lo}, {"hi", window.hi}};
        j["series"] = toJson(series);
        j["finite"] = finite;
        if (exact)
            j["exact"] = toJson(*closed);
        if (!oracle.empty())
            j["oracle"] = oracleJson;
        emit(j);
    } else {
        std::cout << "series: " << series.toString() << "\nfinite: " << (finite ? "true" : "false") << "\n";
        if (exact)
            std::cout << "exact: " << closed->toString() << "\n";
        if (!oracle.empty())
            std::cout << oracleText << "\n";
    }
    return kOk;
}

int cmdEnumerate(const RunConfig &cfg, std::size_t length, bool countOnly, bool products) {
    if (length == 0)
        throw UsageError("--length must be at least 1");
    const Loaded loaded = loadAlphabetFor(cfg);
    const std::vector<Letter> letters = loaded.custom ? loaded.alphabet.letters() : std::vector<Letter>{{"x", 1, 0}};
    std::vector<Word> words;
    if (products)
        words = enumerateWords(length, letters);
    else
        for (auto &t : enumerateIpws(length, letters))
            words.emplace_back(std::move(t));
    std::string note;
    if (length == 7 && letters.size() == 1 && !products)
        note = "a count of 51 is quoted for k = 7; exhaustive enumeration with brute-force deduplication gives " +
               std::to_string(words.size());

    if (cfg.format == Format::Json) {
        Json j;
        j["schema"] = kSchema;
        j["kind"] = "enumeration";
        j["length"] = length;
        j["count"] = words.size();
        if (!countOnly) {
            Json list = Json::array();
            for (const auto &w : words)
                list.push_back(w.render());
            j["words"] = list;
        }
        if (!note.empty())
            j["note"] = note;
        emit(j);
        return kOk;
    }
    if (cfg.format == Format::Dot) {
        if (countOnly)
            throw UsageError("--count-only has no dot form");
        for (const auto &w : words)
            std::cout << toDot(w);
        return kOk;
    }
    if (countOnly)
        std::cout << words.size() << "\n";
    else
        for (const auto &w : words)
            std::cout << w.render() << "\n";
    if (!note.empty())
        std::cout << "note: " << note << "\n";
    return kOk;
}

int cmdCheck(const RunConfig &cfg, const std::vector<std::string> &suites, std::size_t maxLength,
             bool modelGiven) {
    requireNotDot(cfg, "check");
    SuiteOptions options;
    options.maxLength = maxLength;
    options.scheme = parseScheme(cfg.scheme);
    options.model = parseModel(cfg.model);
    const Loaded loaded = loadAlphabetFor(cfg);
    options.letters = loaded.custom ? loaded.alphabet.letters() : std::vector<Letter>{{"x1", 1, 0}};

    std::vector<std::string> names = suites.empty() ? suiteNames() : suites;
    bool allPassed = true;
    Json reports = Json::array();
    for (const auto &name : names) {
        Suite suite;
        try {
            suite = parseSuite(name);
        } catch (const std::invalid_argument &e) {
            throw UsageError(e.what());
        }
        SuiteOptions o = options;
        if (suite == Suite::Overlap && !modelGiven)
            o.model = Model::Propagator;
        const SuiteReport r = runSuite(suite, o);
        allPassed = allPassed && r.passed();
        if (cfg.format == Format::Json)
            reports.push_back(toJson(r));
        else
            std::cout << renderReport(r);
    }
    if (cfg.format == Format::Json) {
        Json j;
        j["schema"] = kSchema;
        j["kind"] = "check-run";
        j["passed"] = allPassed;
        j["reports"] = reports;
        emit(j);
    }
    return allPassed ? kOk : kCheckFailed;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Parenthesized words, their Hopf algebra and toy-model renormalization"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    std::string format = "text";
    app.add_option("--alphabet", cfg.alphabetPath, "alphabet JSON file (falls back to $RENORM_ALPHABET)");
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json", "dot"}));
    app.add_option("--model", cfg.model, "toy model: iterated or propagator")
        ->check(CLI::IsMember({"iterated", "propagator"}));
    app.add_option("--scheme", cfg.scheme, "renormalization scheme: momentum, ms or identity")
        ->check(CLI::IsMember({"momentum", "ms", "identity"}));

    std::string input;
    auto addWord = [&](CLI::App *sub) { sub->add_option("word", input, "parenthesized word")->required(); };

    auto *parse = app.add_subcommand("parse", "canonical form, length, depth and loop order");
    addWord(parse);

    bool trace = false, wrapRight = false;
    auto *delta = app.add_subcommand("delta", "coproduct");
    addWord(delta);
    delta->add_flag("--trace", trace, "record rule applications");
    delta->add_flag("--wrap-right", wrapRight, "apply R to the right leg for R arguments");

    bool bare = false, normal = false;
    auto *anti = app.add_subcommand("antipode", "S[R[w]], or S[w] with --bare");
    addWord(anti);
    anti->add_flag("--bare", bare, "antipode of the bare word");
    anti->add_flag("--normal-form", normal, "split R over products of bare factors");

    auto *z = app.add_subcommand("z", "counterterm from the forest recursion");
    addWord(z);

    bool bar = false;
    auto *ren = app.add_subcommand("renorm", "m[(S (x) id) Delta[w]]");
    addWord(ren);
    ren->add_flag("--bar", bar, "subtract subdivergences only");

    bool renormalized = false, exact = false;
    std::string oracle;
    auto *eval = app.add_subcommand("eval", "Laurent expansion under a model and scheme");
    addWord(eval);
    eval->add_option("--window", cfg.window, "lo:hi range of eps powers");
    eval->add_flag("--renormalized", renormalized, "evaluate renormalize(w)");
    eval->add_flag("--exact", exact, "also print the closed form");
    eval->add_option("--oracle", oracle, "compare with quadrature, e.g. eps=0.05,c=2");

    std::size_t length = 0;
    bool countOnly = false, products = false;
    auto *enumerate = app.add_subcommand("enumerate", "irreducible words of a given length");
    enumerate->add_option("--length", length, "number of letters")->required();
    enumerate->add_flag("--count-only", countOnly, "print the count only");
    enumerate->add_flag("--products", products, "include products of irreducible words");

    std::vector<std::string> suites;
    std::size_t maxLength = 4;
    auto *check = app.add_subcommand("check", "run invariant suites");
    check->add_option("--suite", suites, "suite name; repeatable, all when omitted");
    check->add_option("--max-length", maxLength, "longest word checked");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kUsage;
    }

    cfg.format = format == "json" ? Format::Json : format == "dot" ? Format::Dot : Format::Text;
    const bool modelGiven = app.count("--model") > 0;
    try {
        if (*parse)
            return cmdParse(cfg, input);
        if (*delta)
            return cmdDelta(cfg, input, trace, wrapRight);
        if (*anti)
            return cmdAntipode(cfg, input, bare, normal);
        if (*z)
            return cmdZ(cfg, input);
        if (*ren)
            return cmdRenorm(cfg, input, bar);
        if (*eval)
            return cmdEval(cfg, input, renormalized, exact, oracle);
        if (*enumerate)
            return cmdEnumerate(cfg, length, countOnly, products);
        if (*check)
            return cmdCheck(cfg, suites, maxLength, modelGiven);
    } catch (const ParseError &e) {
        printParseError(e, input);
        return kUsage;
    } catch (const ModelDomainError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kDomain;
    } catch (const OracleError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kDomain;
    } catch (const UsageError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const SchemaError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const WindowError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
