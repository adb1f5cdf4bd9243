#include <doctest.h>

#include "sulva/rational.hpp"

using namespace sulva;

TEST_CASE("rationals normalize to lowest terms with positive denominator") {
    Rational r(6, -8);
    CHECK(r.numerator() == -3);
    CHECK(r.denominator() == 4);
    CHECK(Rational(0, 5) == Rational(0));
    CHECK(Rational(-2, -4) == Rational(1, 2));
}

TEST_CASE("rational arithmetic is exact") {
    CHECK(Rational(1, 3) + Rational(1, 12) == Rational(5, 12));
    CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(7, 2) / Rational(7, 4) == Rational(2));
    CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
    CHECK_THROWS_AS(Rational(1, 0), Error);
}

TEST_CASE("the savisesha series sums to 577/408") {
    // Independent route: plain GMP rationals.
    mpq_class sum = mpq_class(1) + mpq_class(1, 3) + mpq_class(1, 12) - mpq_class(1, 408);
    CHECK(sum == mpq_class(577, 408));
}

TEST_CASE("the four-term squaring series sums to 9785/11136") {
    mpq_class sum = mpq_class(7, 8) + mpq_class(1, 8 * 29) - mpq_class(1, 8 * 29 * 6)
                  + mpq_class(1, 8 * 29 * 6 * 8);
    CHECK(sum == mpq_class(9785, 11136));
}

TEST_CASE("parsing accepts p and p/q forms only") {
    CHECK(Rational::parse("13/15") == Rational(13, 15));
    CHECK(Rational::parse("-5") == Rational(-5));
    CHECK(Rational::parse("+5") == Rational(5));
    CHECK_THROWS_AS(Rational::parse("1.5"), Error);
    CHECK_THROWS_AS(Rational::parse(""), Error);
    CHECK_THROWS_AS(Rational::parse("1/0"), Error);
    CHECK_THROWS_AS(Rational::parse("a/b"), Error);
}

TEST_CASE("sqrt_exact recognizes perfect squares") {
    CHECK(*Rational(4).sqrt_exact() == Rational(2));
    CHECK(*Rational(9, 16).sqrt_exact() == Rational(3, 4));
    CHECK(*Rational(0).sqrt_exact() == Rational(0));
    CHECK(!Rational(2).sqrt_exact());
    CHECK(!Rational(4, 3).sqrt_exact());
    CHECK(!Rational(-4).sqrt_exact());
}

TEST_CASE("decimal rendering rounds to nearest") {
    CHECK(Rational(577, 408).to_decimal(8) == "1.4142157");
    CHECK(Rational(577, 408).to_decimal(10) == "1.414215686");
    CHECK(Rational(1, 3).to_decimal(5) == "0.33333");
    CHECK(Rational(2, 3).to_decimal(5) == "0.66667");
    CHECK(Rational(-2, 3).to_decimal(5) == "-0.66667");
    CHECK(Rational(0).to_decimal(5) == "0");
    CHECK(Rational(120).to_decimal(3) == "120");
    CHECK(Rational(1, 2).to_fixed(3) == "0.500");
    CHECK(Rational(-1, 8).to_fixed(2) == "-0.13");
}

TEST_CASE("pow10 covers both directions") {
    CHECK(Rational::pow10(3) == Rational(1000));
    CHECK(Rational::pow10(0) == Rational(1));
    CHECK(Rational::pow10(-2) == Rational(1, 100));
}
