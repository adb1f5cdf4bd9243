#include <doctest.h>

#include "sulva/script.hpp"

using namespace sulva;

namespace {

Scalar q(long n, long d = 1) { return Scalar(Rational(n, d)); }

const Scalar& binding_scalar(const RunOutcome& outcome, const std::string& binding,
                             const std::string& field) {
    for (const auto& [name, result] : outcome.bindings)
        if (name == binding) {
            const Scalar* s = result.find_scalar(field);
            REQUIRE(s != nullptr);
            return *s;
        }
    FAIL(("no binding " + binding));
    static Scalar zero;
    return zero;
}

} // namespace

TEST_CASE("a single binding parses and runs") {
    Script script = parse_script("let r = circle-from-square(side: 1)\n");
    REQUIRE(script.statements.size() == 1);
    RunOutcome outcome = run_script(script, 30);
    Scalar expected = (q(2) + sqrt(q(2))) / q(6);
    CHECK(certified_equal(binding_scalar(outcome, "r", "radius"), expected));
}

TEST_CASE("parse-time validation catches the spec'd failure modes") {
    CHECK_THROWS_AS(parse_script("let x = frobnicate(1)\n"), ScriptError);
    try {
        parse_script("let x = frobnicate(a: 1)\n");
        FAIL("expected UnknownOperation");
    } catch (const ScriptError& e) {
        CHECK(e.kind() == ScriptError::Kind::UnknownOperation);
        CHECK(e.line() == 1);
    }

    try {
        parse_script("let y = sum-of-squares(a: 3)\n");
        FAIL("expected ArityMismatch");
    } catch (const ScriptError& e) {
        CHECK(e.kind() == ScriptError::Kind::ArityMismatch);
    }

    try {
        parse_script("let y = sum-of-squares(a: 3, b: 4, zz: 5)\n");
        FAIL("expected ArityMismatch");
    } catch (const ScriptError& e) {
        CHECK(e.kind() == ScriptError::Kind::ArityMismatch);
    }

    try {
        parse_script("let y = sum-of-squares(a: w, b: 4)\n");
        FAIL("expected UnboundName");
    } catch (const ScriptError& e) {
        CHECK(e.kind() == ScriptError::Kind::UnboundName);
    }

    try {
        parse_script("let y = sum-of-squares(a: 3 +, b: 4)\n");
        FAIL("expected SyntaxError");
    } catch (const ScriptError& e) {
        CHECK(e.kind() == ScriptError::Kind::Syntax);
    }

    // Decimal literals are rejected; quotients are the way to say it.
    CHECK_THROWS_AS(parse_script("let y = sum-of-squares(a: 1.5, b: 4)\n"), ScriptError);
    // Method names are validated at parse time.
    CHECK_THROWS_AS(parse_script("let y = square-from-circle(diameter: 2, method: wild)\n"),
                    ScriptError);
    CHECK_THROWS_AS(parse_script("render z to \"x.svg\"\n"), ScriptError);
    CHECK_THROWS_AS(parse_script("blargh\n"), ScriptError);
}

TEST_CASE("bindings chain through the savisesha comparison") {
    Script script = parse_script(
        "# sqrt(2) the way the texts put it\n"
        "let v = sqrt2-savisesha()\n"
        "let c = compare-sqrt2(candidate: v)\n");
    RunOutcome outcome = run_script(script, 20);
    CHECK(*binding_scalar(outcome, "v", "value").rational_value() == Rational(577, 408));
    CHECK(*binding_scalar(outcome, "c", "agreement-digits").rational_value() == Rational(5));
}

TEST_CASE("construction failures carry the binding name and line") {
    Script script = parse_script("let d = difference-of-squares(a: 1, b: 1)\n");
    try {
        run_script(script, 20);
        FAIL("expected NotLarger");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotLarger);
        CHECK(std::string(e.what()).find("'d'") != std::string::npos);
        CHECK(std::string(e.what()).find("line 1") != std::string::npos);
    }
}

TEST_CASE("statements separate on newlines and semicolons, comments vanish") {
    Script script = parse_script(
        "let a = sqrt2-savisesha(); let b = sum-of-squares(a: a, b: 1)  # chained\n");
    REQUIRE(script.statements.size() == 2);
    RunOutcome outcome = run_script(script, 20);
    Scalar expected = sqrt(square(q(577, 408)) + q(1));
    CHECK(certified_equal(binding_scalar(outcome, "b", "side"), expected));
}

TEST_CASE("unparse is a fixpoint under reparsing") {
    const char* sources[] = {
        "let r = circle-from-square(side: 1)\nrender r to \"r.svg\"\n",
        "let v = sqrt2-savisesha()\nlet c = compare-sqrt2(candidate: v)\n"
        "report format csv to \"out.csv\"\n",
        "let s = sum-of-squares(a: 3, b: sqrt(2))\nlet t = sum-of-squares(a: s, b: s)\n",
        "let n = sqrt-n-altitude(n: 7)\nrender n to \"n.svg\" precision 9\n",
    };
    for (const char* source : sources) {
        CAPTURE(source);
        Script once = parse_script(source);
        std::string printed = unparse_script(once);
        Script twice = parse_script(printed);
        CHECK(unparse_script(twice) == printed);
    }
}

TEST_CASE("render and report directives emit files") {
    Script script = parse_script(
        "let r = circle-from-square(side: 1)\n"
        "render r to \"fig.svg\"\n"
        "report format text to \"report.txt\"\n");
    RunOutcome outcome = run_script(script, 20);
    REQUIRE(outcome.files.size() == 2);
    CHECK(outcome.files[0].first == "fig.svg");
    CHECK(outcome.files[0].second.find("<svg") != std::string::npos);
    CHECK(outcome.files[1].first == "report.txt");
    CHECK(outcome.files[1].second.find("circling-rule") != std::string::npos);

    Script no_trace = parse_script(
        "let v = sqrt2-savisesha()\nrender v to \"v.svg\"\n");
    CHECK_THROWS_AS(run_script(no_trace, 20), Error);
}
