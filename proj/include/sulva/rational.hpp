#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

#include "sulva/errors.hpp"

namespace sulva {

/// Arbitrary-precision rational, always kept in canonical form
/// (positive denominator, gcd(numerator, denominator) == 1).
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long n, long d);
    Rational(const mpz_class& n, const mpz_class& d);
    explicit Rational(mpq_class v);

    /// Parses "p", "p/q" or "-p/q". Whitespace is not accepted.
    static Rational parse(std::string_view text);

    const mpq_class& value() const { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_negative() const { return sgn(v_) < 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    /// Exact square root if the value is a perfect square of a rational.
    std::optional<Rational> sqrt_exact() const;

    Rational abs() const;

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    /// "p/q", or just "p" for integers.
    std::string to_string() const;

    /// Round-to-nearest decimal with `significant` significant digits
    /// (ties away from zero). Exact; no binary float involved.
    std::string to_decimal(int significant) const;

    /// Round-to-nearest decimal with `places` digits after the point.
    std::string to_fixed(int places) const;

    /// 10^k as a rational (k may be negative).
    static Rational pow10(long k);

private:
    mpq_class v_;
};

} // namespace sulva
