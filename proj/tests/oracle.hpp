#pragma once

// Test-only oracles, independent of the library's evaluation path:
// integer square roots over GMP for certified digit brackets, a
// brute-force triple enumerator, and a deterministic RNG helper.

#include <gmpxx.h>

#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "sulva/rational.hpp"

namespace oracle {

// floor(sqrt(num/den) * 10^digits) via pure integer arithmetic. The true
// root lies in [result/10^d, (result+1)/10^d).
inline mpz_class sqrt_scaled_floor(const mpz_class& num, const mpz_class& den, int digits) {
    mpz_class pow;
    mpz_ui_pow_ui(pow.get_mpz_t(), 10, static_cast<unsigned long>(2 * digits));
    mpz_class scaled = num * pow / den;
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
    return root;
}

// Certified rational brackets around sqrt(num/den).
struct SqrtBracket {
    sulva::Rational lower, upper;
};

inline SqrtBracket sqrt_bracket(long num, long den, int digits) {
    mpz_class root = sqrt_scaled_floor(num, den, digits);
    mpz_class pow;
    mpz_ui_pow_ui(pow.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    return {sulva::Rational(root, pow), sulva::Rational(root + 1, pow)};
}

struct Triple {
    long a, b, c;
    auto operator<=>(const Triple&) const = default;
};

// Brute-force primitive triples with hypotenuse <= limit, ordered (c, a).
inline std::vector<Triple> brute_force_triples(long limit) {
    std::vector<Triple> out;
    for (long c = 5; c <= limit; ++c)
        for (long a = 3; a < c; ++a) {
            long b2 = c * c - a * a;
            long b = static_cast<long>(std::sqrt(static_cast<double>(b2)));
            while (b * b < b2)
                ++b;
            while (b * b > b2)
                --b;
            if (b * b != b2 || b < a)
                continue;
            if (std::gcd(std::gcd(a, b), c) != 1)
                continue;
            out.push_back({a, b, c});
        }
    return out;
}

inline std::mt19937_64 rng(unsigned long seed) { return std::mt19937_64(seed); }

inline sulva::Rational random_rational(std::mt19937_64& gen, long max_abs = 20) {
    std::uniform_int_distribution<long> num(-max_abs, max_abs);
    std::uniform_int_distribution<long> den(1, max_abs);
    return sulva::Rational(num(gen), den(gen));
}

inline sulva::Rational random_positive_rational(std::mt19937_64& gen, long max_abs = 20) {
    std::uniform_int_distribution<long> num(1, max_abs);
    std::uniform_int_distribution<long> den(1, max_abs);
    return sulva::Rational(num(gen), den(gen));
}

} // namespace oracle
