#include <doctest.h>

#include <functional>

#include "oracle.hpp"
#include "sulva/expr_parse.hpp"
#include "sulva/interval.hpp"

using namespace sulva;

namespace {

Scalar q(long n, long d = 1) { return Scalar(Rational(n, d)); }

// Random expression over small rationals; sqrt applies to squares to stay
// nonnegative, divisors are shifted away from zero.
Scalar random_expression(std::mt19937_64& gen, int depth) {
    std::uniform_int_distribution<int> pick(0, 5);
    if (depth <= 0)
        return Scalar(oracle::random_rational(gen, 9));
    switch (pick(gen)) {
    case 0: return random_expression(gen, depth - 1) + random_expression(gen, depth - 1);
    case 1: return random_expression(gen, depth - 1) - random_expression(gen, depth - 1);
    case 2: return random_expression(gen, depth - 1) * random_expression(gen, depth - 1);
    case 3: {
        Scalar denom = square(random_expression(gen, depth - 1)) + q(1);
        return random_expression(gen, depth - 1) / denom;
    }
    case 4: return sqrt(square(random_expression(gen, depth - 1)));
    default: return Scalar(oracle::random_rational(gen, 9));
    }
}

} // namespace

TEST_CASE("field operations fold rationals") {
    CHECK(*(q(1, 3) + q(1, 12)).rational_value() == Rational(5, 12));
    Scalar series = q(1) + q(1, 3) + q(1, 12) - q(1, 408);
    CHECK(*series.rational_value() == Rational(577, 408));
    CHECK_THROWS_AS(q(1) / q(0), Error);
    CHECK_THROWS_AS(q(1) / (sqrt(q(2)) - sqrt(q(2))), Error);
}

TEST_CASE("sqrt recognizes perfect squares and rejects negatives") {
    CHECK(*sqrt(q(4)).rational_value() == Rational(2));
    CHECK(*sqrt(q(9, 16)).rational_value() == Rational(3, 4));
    CHECK(!sqrt(q(2)).rational_value());
    CHECK_THROWS_AS(sqrt(q(-1)), Error);
    CHECK_THROWS_AS(sqrt(q(0) - sqrt(q(2))), Error);
}

TEST_CASE("sqrt(2) evaluation matches the integer-sqrt oracle at 30 digits") {
    auto bracket = oracle::sqrt_bracket(2, 1, 30);
    Scalar root2 = sqrt(q(2));
    CHECK(compare(root2, Scalar(bracket.lower)) == CompareResult::Greater);
    CHECK(compare(root2, Scalar(bracket.upper)) == CompareResult::Less);
    // Frozen digits, produced by the same oracle.
    CHECK(to_decimal(root2, 30) == "1.41421356237309504880168872421");
}

TEST_CASE("evaluate returns certified enclosures") {
    Interval series = evaluate(q(577, 408), 10);
    CHECK(series.contains(Rational(577, 408)));
    CHECK(series.width_below(Rational(1, 1000000000)));
    CHECK(to_decimal(q(577, 408), 10) == "1.414215686");

    Interval zero = evaluate(q(0), 25);
    CHECK(zero.lower.sign() == 0);
    CHECK(zero.upper.sign() == 0);

    CHECK(to_decimal(sqrt(q(2)), 10) == "1.414213562");
    CHECK(to_decimal(sqrt(q(7)), 8) == "2.6457513");
}

TEST_CASE("higher precision never widens and always nests") {
    auto gen = oracle::rng(20260809);
    for (int i = 0; i < 1000; ++i) {
        Scalar e = random_expression(gen, 3);
        Interval loose = evaluate(e, 8);
        Interval tight = evaluate(e, 16);
        CAPTURE(e.expression_string());
        CHECK(tight.contained_in(loose));
        CHECK(tight.width().cmp(loose.width()) <= 0);
    }
}

TEST_CASE("compare decides symbolically where it can") {
    Scalar root2 = sqrt(q(2));
    CHECK(compare(root2 * root2, q(2)) == CompareResult::Equal);
    CHECK(compare(q(577, 408), root2) == CompareResult::Greater);
    CHECK(compare(root2, q(577, 408)) == CompareResult::Less);
    CHECK(compare(sqrt(q(2)) * sqrt(q(8)), q(4)) == CompareResult::Equal);
    CHECK(compare((q(1) + root2) * (root2 - q(1)), q(1)) == CompareResult::Equal);
}

TEST_CASE("comparisons beyond max_precision stay undecided") {
    Scalar a = q(13, 15);
    Scalar close = q(13, 15) + Scalar(Rational::pow10(-150));
    CHECK(compare(a, close, 100) == CompareResult::Undecided);
    CHECK(compare(a, close, 200) == CompareResult::Less);
}

TEST_CASE("field axioms hold under certified equality") {
    auto gen = oracle::rng(42);
    for (int i = 0; i < 200; ++i) {
        Scalar a(oracle::random_rational(gen));
        Scalar b(oracle::random_rational(gen));
        Scalar c(oracle::random_rational(gen));
        CHECK(certified_equal((a + b) + c, a + (b + c)));
        CHECK(certified_equal(a * (b + c), a * b + a * c));
    }
    // The same axioms with shared surds in play.
    Scalar s2 = sqrt(q(2)), s5 = sqrt(q(5));
    CHECK(certified_equal((s2 + s5) + q(1), s2 + (s5 + q(1))));
    CHECK(certified_equal(s2 * (s5 + q(3)), s2 * s5 + s2 * q(3)));
}

TEST_CASE("sqrt squares back to its radicand") {
    auto gen = oracle::rng(7);
    for (int i = 0; i < 100; ++i) {
        Rational r = oracle::random_positive_rational(gen);
        Scalar x{r};
        CHECK(certified_equal(square(sqrt(x)), x));
    }
    for (int i = 0; i < 50; ++i) {
        Scalar x = q(1) + square(random_expression(gen, 2)); // nonnegative surd expression
        CHECK(certified_equal(square(sqrt(x)), x));
    }
}

TEST_CASE("expression strings round-trip through the parser") {
    auto gen = oracle::rng(99);
    for (int i = 0; i < 200; ++i) {
        Scalar e = random_expression(gen, 3);
        std::string s = e.expression_string();
        Scalar back = parse_expression(s);
        CAPTURE(s);
        CHECK(certified_equal(e, back));
    }
    Scalar rho = (q(2) + sqrt(q(2))) / q(6);
    CHECK(rho.expression_string() == "(2 + sqrt(2))/6");
    CHECK(certified_equal(parse_expression("(2 + sqrt(2))/6"), rho));
}

TEST_CASE("expression parser rejects bad input") {
    CHECK_THROWS_AS(parse_expression("1.5"), Error);
    CHECK_THROWS_AS(parse_expression("1 +"), Error);
    CHECK_THROWS_AS(parse_expression("sqrt 2"), Error);
    CHECK_THROWS_AS(parse_expression("(1"), Error);
    CHECK_THROWS_AS(parse_expression("frob"), Error);
    CHECK_THROWS_AS(parse_expression(""), Error);
    CHECK(*parse_expression("-(3/4) + 1").rational_value() == Rational(1, 4));
}

TEST_CASE("scientific rendering carries sign and magnitude") {
    Scalar diff = q(577, 408) - sqrt(q(2));
    CHECK(to_scientific(diff, 4) == "+2.124e-06");
    CHECK(to_scientific(q(0) - diff, 4) == "-2.124e-06");
    CHECK(to_scientific(q(0), 4) == "+0.000e+00");
}
