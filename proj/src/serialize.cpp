#include "renorm/serialize.hpp"

#include <fstream>

namespace renorm {

namespace {

Json header(const char *kind) {
    Json j;
    j["schema"] = kSchema;
    j["kind"] = kind;
    return j;
}

void expect(const Json &j, const char *kind) {
    if (!j.is_object() || j.value("schema", "") != kSchema)
        throw SchemaError("expected a renorm/1 document");
    if (j.value("kind", "") != kind)
        throw SchemaError(std::string("expected kind '") + kind + "'");
}

Rational rationalField(const Json &j) {
    if (j.is_number_integer())
        return makeRational(j.get<long>());
    if (!j.is_string())
        throw SchemaError("rational must be a string \"p/q\"");
    try {
        return parseRational(j.get<std::string>());
    } catch (const std::invalid_argument &e) {
        throw SchemaError(e.what());
    }
}

Json polynomialJson(const Polynomial &p) {
    Json out = Json::array();
    for (const auto &c : p.coeffs())
        out.push_back(toString(c));
    return out;
}

Polynomial polynomialFromJson(const Json &j) {
    std::vector<Rational> c;
    for (const auto &x : j)
        c.push_back(rationalField(x));
    return Polynomial(std::move(c));
}

template <std::size_t N>
Json tensorJson(const Tensor<N> &t, const char *kind) {
    Json j = header(kind);
    Json terms = Json::array();
    for (const auto &[key, q] : t) {
        Json legs = Json::array();
        for (const auto &m : key)
            legs.push_back(m.key());
        terms.push_back({{"coefficient", toString(q)}, {"monomial", renderTensorKey(key.data(), N)}, {"legs", legs}});
    }
    j["terms"] = terms;
    return j;
}

} // namespace

Json toJson(const Word &w) {
    Json j = header("word");
    j["canonical"] = w.render();
    j["length"] = w.length();
    j["depth"] = w.depth();
    j["loopOrder"] = w.loopOrder();
    return j;
}

Json toJson(const Expr &a) {
    Json j = header("expr");
    Json terms = Json::array();
    for (const auto &[m, q] : a)
        terms.push_back({{"coefficient", toString(q)}, {"monomial", m.key()}});
    j["terms"] = terms;
    return j;
}

Json toJson(const Tensor2 &t) { return tensorJson(t, "tensor2"); }
Json toJson(const Tensor3 &t) { return tensorJson(t, "tensor3"); }

Json toJson(const EpsSeries &s) {
    Json j = header("eps-series");
    j["lo"] = s.lo();
    j["hi"] = s.hi() == EpsSeries::kExact ? Json(nullptr) : Json(s.hi());
    Json coeffs = Json::object();
    for (const auto &[k, c] : s.coeffs())
        coeffs[std::to_string(k)] = c.toString();
    j["coeffs"] = coeffs;
    return j;
}

Json toJson(const ScaledSum &s) {
    Json j = header("scaled-sum");
    Json terms = Json::array();
    for (const auto &[scaling, pref] : s.terms()) {
        Json parts = Json::array();
        for (const auto &[gammas, r] : pref.terms()) {
            Json g = Json::array();
            for (const auto &x : gammas)
                g.push_back({toString(x.a), toString(x.b)});
            parts.push_back({{"gammas", g}, {"num", polynomialJson(r.num())}, {"den", polynomialJson(r.den())}});
        }
        terms.push_back({{"p", scaling.p}, {"n", toString(scaling.n)}, {"prefactor", parts}, {"text", pref.toString()}});
    }
    j["terms"] = terms;
    return j;
}

Json toJson(const OracleResult &r) {
    Json j = header("oracle");
    j["value"] = r.value;
    j["error"] = r.error;
    j["tolerance"] = r.tolerance;
    return j;
}

Json toJson(const Alphabet &a) {
    Json j = header("alphabet");
    Json letters = Json::array();
    for (const auto &l : a.letters())
        letters.push_back({{"name", l.name}, {"loops", l.loops}, {"degree", l.degree}});
    j["letters"] = letters;
    return j;
}

Json traceToJson(const std::string &input, const Trace &trace, const Tensor2 &output) {
    Json j = header("trace");
    j["input"] = input;
    Json steps = Json::array();
    for (const auto &s : trace)
        steps.push_back({{"rule", s.rule}, {"input", s.input}, {"output", s.output}});
    j["rule-applications"] = steps;
    j["output"] = toJson(output);
    return j;
}

Expr exprFromJson(const Json &j, const Alphabet &alphabet) {
    expect(j, "expr");
    Expr out;
    for (const auto &t : j.at("terms"))
        out.add(parseMonomial(t.at("monomial").get<std::string>(), alphabet), rationalField(t.at("coefficient")));
    return out;
}

Tensor2 tensor2FromJson(const Json &j, const Alphabet &alphabet) {
    expect(j, "tensor2");
    Tensor2 out;
    for (const auto &t : j.at("terms")) {
        const Json &legs = t.at("legs");
        if (!legs.is_array() || legs.size() != 2)
            throw SchemaError("tensor2 term needs two legs");
        out.add({parseMonomial(legs[0].get<std::string>(), alphabet), parseMonomial(legs[1].get<std::string>(), alphabet)},
                rationalField(t.at("coefficient")));
    }
    return out;
}

EpsSeries epsSeriesFromJson(const Json &j) {
    expect(j, "eps-series");
    const Json &hi = j.at("hi");
    EpsSeries out(j.at("lo").get<int>(), hi.is_null() ? EpsSeries::kExact : hi.get<int>());
    for (const auto &[k, c] : j.at("coeffs").items()) {
        try {
            out.add(std::stoi(k), parseCoeffPoly(c.get<std::string>()));
        } catch (const std::invalid_argument &e) {
            throw SchemaError(std::string("bad coefficient: ") + e.what());
        }
    }
    return out;
}

ScaledSum scaledSumFromJson(const Json &j) {
    expect(j, "scaled-sum");
    ScaledSum out;
    for (const auto &t : j.at("terms")) {
        Prefactor pref;
        for (const auto &part : t.at("prefactor")) {
            Prefactor::Gammas gammas;
            for (const auto &g : part.at("gammas"))
                gammas.emplace_back(rationalField(g.at(0)), rationalField(g.at(1)));
            pref += Prefactor(RationalFunction(polynomialFromJson(part.at("num")), polynomialFromJson(part.at("den"))),
                              gammas);
        }
        out += ScaledSum::term({t.at("p").get<int>(), rationalField(t.at("n"))}, pref);
    }
    return out;
}

Alphabet alphabetFromJson(const Json &j) {
    if (j.contains("schema") && j["schema"] != kSchema)
        throw SchemaError("unsupported alphabet schema");
    if (!j.contains("letters") || !j["letters"].is_array())
        throw SchemaError("alphabet needs a \"letters\" array");
    Alphabet a;
    for (const auto &l : j["letters"]) {
        Letter letter;
        letter.name = l.at("name").get<std::string>();
        letter.loops = l.value("loops", 1);
        letter.degree = l.value("degree", 0);
        try {
            a.add(letter);
        } catch (const std::invalid_argument &e) {
            throw SchemaError(e.what());
        }
    }
    return a;
}

Alphabet loadAlphabet(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw SchemaError("cannot open alphabet file " + path);
    try {
        return alphabetFromJson(Json::parse(in));
    } catch (const nlohmann::json::exception &e) {
        throw SchemaError(path + ": " + e.what());
    }
}

} // namespace renorm
