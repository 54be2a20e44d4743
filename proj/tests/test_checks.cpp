#include <doctest.h>

#include "renorm/checks.hpp"

using namespace renorm;

TEST_CASE("suite names round trip") {
    for (const auto &name : suiteNames())
        CHECK(toString(parseSuite(name)) == name);
    CHECK_THROWS_AS(parseSuite("hopf"), std::invalid_argument);
}

TEST_CASE("all suites pass on short words") {
    SuiteOptions o;
    o.maxLength = 3;
    for (const auto &name : suiteNames()) {
        CAPTURE(name);
        const SuiteReport r = runSuite(parseSuite(name), o);
        CHECK(r.passed());
        CHECK(r.failures.empty());
        CHECK(r.cases > 0);
    }
}

TEST_CASE("minimal subtraction is flagged with a witness") {
    SuiteOptions o;
    o.maxLength = 3;
    o.scheme = Scheme::MS;
    const SuiteReport r = checkCoassoc(o);
    CHECK(r.expectViolation);
    REQUIRE(r.witness);
    CHECK(r.witness->subject == "((x1)x1)");
    CHECK(r.passed());
    const Json j = toJson(r);
    CHECK(j.at("mode") == "expect-violation");
    CHECK(j.at("passed") == true);
    CHECK(j.contains("witness"));
}

TEST_CASE("evaluated suites skip linear letters") {
    SuiteOptions o;
    o.maxLength = 2;
    o.model = Model::Propagator;
    o.letters = {{"x1", 1, 0}, {"J1", 1, 1}};
    for (const auto &w : suiteWords(o))
        CHECK(w.render().find("J1") == std::string::npos);
    CHECK(checkFiniteness(o).passed());
}

TEST_CASE("failure reports") {
    SuiteReport r;
    r.suite = "demo";
    r.failures.push_back({"(x1)", "broken"});
    CHECK_FALSE(r.passed());
    CHECK(toJson(r).at("failures").size() == 1);
    CHECK(renderReport(r).find("FAIL") != std::string::npos);
}
