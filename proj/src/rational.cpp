#include "sulva/rational.hpp"

#include <cctype>

namespace sulva {

Rational::Rational(long n, long d) {
    if (d == 0)
        fail(Errc::DivisionByZero, "rational with zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rational::Rational(const mpz_class& n, const mpz_class& d) {
    if (d == 0)
        fail(Errc::DivisionByZero, "rational with zero denominator");
    v_ = mpq_class(n) / mpq_class(d);
    v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v)) {
    if (v_.get_den() == 0)
        fail(Errc::DivisionByZero, "rational with zero denominator");
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    auto valid = [](std::string_view part) {
        if (part.empty())
            return false;
        size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
        if (i == part.size())
            return false;
        for (; i < part.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(part[i])))
                return false;
        return true;
    };
    std::string num(text), den = "1";
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = std::string(text.substr(0, slash));
        den = std::string(text.substr(slash + 1));
    }
    if (!valid(num) || !valid(den))
        fail(Errc::InvalidArgument, "malformed rational literal '" + std::string(text) + "'");
    mpz_class n(num), d(den);
    if (d == 0)
        fail(Errc::DivisionByZero, "rational literal with zero denominator");
    return Rational(n, d);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero())
        fail(Errc::DivisionByZero, "rational division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::abs() const {
    return is_negative() ? -*this : *this;
}

std::optional<Rational> Rational::sqrt_exact() const {
    if (is_negative())
        return std::nullopt;
    if (is_zero())
        return Rational(0);
    mpz_class num = numerator(), den = denominator();
    if (mpz_perfect_square_p(num.get_mpz_t()) && mpz_perfect_square_p(den.get_mpz_t())) {
        mpz_class rn, rd;
        mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
        return Rational(rn, rd);
    }
    return std::nullopt;
}

std::string Rational::to_string() const {
    return v_.get_str();
}

Rational Rational::pow10(long k) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(k < 0 ? -k : k));
    return k >= 0 ? Rational(p, 1) : Rational(1, p);
}

namespace {

// Writes |v| rounded to nearest at `scale` digits after the point, as an
// integer string of the scaled value. Ties away from zero.
mpz_class scaled_round_abs(const mpq_class& v, long scale) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(scale));
    mpq_class scaled = ::abs(v) * mpq_class(p);
    // round(x) = floor((2x + 1) / 2)
    mpq_class twice = 2 * scaled + 1;
    mpz_class result = twice.get_num() / (2 * twice.get_den());
    return result;
}

std::string place_point(const mpz_class& digits_abs, long places, bool negative) {
    std::string s = digits_abs.get_str();
    if (places > 0) {
        if (static_cast<long>(s.size()) <= places)
            s.insert(0, static_cast<size_t>(places + 1 - s.size()), '0');
        s.insert(s.size() - static_cast<size_t>(places), ".");
    }
    if (negative && s.find_first_not_of("0.") != std::string::npos)
        s.insert(0, "-");
    return s;
}

} // namespace

std::string Rational::to_fixed(int places) const {
    if (places < 0)
        places = 0;
    mpz_class scaled = scaled_round_abs(v_, places);
    return place_point(scaled, places, is_negative());
}

std::string Rational::to_decimal(int significant) const {
    if (significant < 1)
        significant = 1;
    if (is_zero())
        return "0";
    // Find the decimal exponent e with 10^e <= |v| < 10^(e+1), then keep
    // `significant` digits starting at 10^e.
    mpq_class a = ::abs(v_);
    long e = 0;
    mpq_class probe = a;
    while (probe >= 10) { probe /= 10; ++e; }
    while (probe < 1) { probe *= 10; --e; }
    for (;;) {
        long places = significant - 1 - e;
        if (places < 0) {
            // Integral rounding at a coarser-than-unit scale.
            mpz_class p;
            mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(-places));
            mpq_class shrunk = a / mpq_class(p);
            mpz_class rounded = scaled_round_abs(shrunk, 0) * p;
            std::string s = rounded.get_str();
            if (is_negative())
                s.insert(0, "-");
            return s;
        }
        mpz_class scaled = scaled_round_abs(v_, places);
        // Rounding may carry into one more digit (9.99 -> 10); rescale once.
        if (static_cast<long>(scaled.get_str().size()) > significant) {
            ++e;
            continue;
        }
        return place_point(scaled, places, is_negative());
    }
}

} // namespace sulva
