#pragma once

#include <string>

#include <json.hpp>

#include "renorm/hopf.hpp"
#include "renorm/oracle.hpp"
#include "renorm/toymodel.hpp"

// JSON forms of the engine's values. Every document carries
// "schema": "renorm/1" and a "kind" tag; the readers check both.

namespace renorm {

using Json = nlohmann::ordered_json;

inline constexpr const char *kSchema = "renorm/1";

class SchemaError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Json toJson(const Word &w);
Json toJson(const Expr &a);
Json toJson(const Tensor2 &t);
Json toJson(const Tensor3 &t);
Json toJson(const EpsSeries &s);
Json toJson(const ScaledSum &s);
Json toJson(const OracleResult &r);
Json toJson(const Alphabet &a);
/// {input, rule-applications, output}
Json traceToJson(const std::string &input, const Trace &trace, const Tensor2 &output);

Expr exprFromJson(const Json &j, const Alphabet &alphabet);
Tensor2 tensor2FromJson(const Json &j, const Alphabet &alphabet);
EpsSeries epsSeriesFromJson(const Json &j);
ScaledSum scaledSumFromJson(const Json &j);

/// {"letters": [{"name": "x1", "loops": 1, "degree": 0}, ...]}; the schema
/// field is optional here since alphabet files are written by hand.
Alphabet alphabetFromJson(const Json &j);
Alphabet loadAlphabet(const std::string &path);

} // namespace renorm
