#pragma once

#include <mpfr.h>

#include <string>

#include "sulva/rational.hpp"
#include "sulva/scalar.hpp"

namespace sulva {

/// Value-semantic wrapper around one mpfr number.
class BigFloat {
public:
    BigFloat() { mpfr_init2(v_, 64); mpfr_set_zero(v_, 1); }
    explicit BigFloat(mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    BigFloat(const BigFloat& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    BigFloat(BigFloat&& o) noexcept { mpfr_init2(v_, 64); mpfr_swap(v_, o.v_); }
    BigFloat& operator=(const BigFloat& o);
    BigFloat& operator=(BigFloat&& o) noexcept { mpfr_swap(v_, o.v_); return *this; }
    ~BigFloat() { mpfr_clear(v_); }

    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }

    int cmp(const BigFloat& o) const { return mpfr_cmp(v_, o.v_); }
    int cmp(const Rational& q) const { return mpfr_cmp_q(v_, q.value().get_mpq_t()); }
    int sign() const { return mpfr_sgn(v_); }

    /// Decimal string at `significant` digits, round-to-nearest.
    std::string to_decimal(int significant) const;
    /// Fixed-point decimal with `places` digits after the point.
    std::string to_fixed(int places) const;
    /// Scientific form like "+2.124e-06".
    std::string to_scientific(int significant) const;

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

private:
    mpfr_t v_;
};

/// Certified enclosure of an exact value: lower <= value <= upper.
class Interval {
public:
    BigFloat lower, upper;
    int precision_digits = 0;

    bool contains(const Rational& q) const { return lower.cmp(q) <= 0 && upper.cmp(q) >= 0; }
    bool contains_zero() const { return lower.sign() <= 0 && upper.sign() >= 0; }
    bool entirely_below(const Rational& q) const { return upper.cmp(q) < 0; }
    bool entirely_above(const Rational& q) const { return lower.cmp(q) > 0; }
    bool disjoint_from(const Interval& o) const {
        return upper.cmp(o.lower) < 0 || lower.cmp(o.upper) > 0;
    }
    bool contained_in(const Interval& o) const {
        return lower.cmp(o.lower) >= 0 && upper.cmp(o.upper) <= 0;
    }

    BigFloat width() const;
    bool width_below(const Rational& q) const { return width().cmp(q) < 0; }

    BigFloat midpoint() const;

    /// "[lo, hi]" rendered at `significant` digits.
    std::string to_string(int significant = 12) const;
};

/// Certified enclosure of the scalar. Width is at most
/// 10^(1-precision) * max(1, |value|), usually far smaller; results at
/// higher precision nest inside results at lower precision.
Interval evaluate(const Scalar& x, int precision_digits);

enum class CompareResult { Less, Equal, Greater, Undecided };

const char* to_string(CompareResult r);

/// Certified three-way comparison. Equal only by symbolic proof;
/// Less/Greater only when enclosures at some precision up to
/// max_precision are disjoint; otherwise Undecided.
CompareResult compare(const Scalar& a, const Scalar& b, int max_precision_digits = 100);

inline bool certified_equal(const Scalar& a, const Scalar& b, int max_precision = 100) {
    return compare(a, b, max_precision) == CompareResult::Equal;
}

/// Round-to-nearest decimal rendering with every printed digit certified
/// by interval refinement; exact for rational-valued expressions.
std::string to_decimal(const Scalar& x, int significant_digits);

/// Like to_decimal but with `places` digits after the decimal point.
std::string to_fixed(const Scalar& x, int places);

/// Scientific notation, e.g. "+2.124e-06"; always carries a sign.
std::string to_scientific(const Scalar& x, int significant_digits);

namespace detail {

/// Certification used by Scalar's smart constructors. Throws on failure.
void certify_nonzero(const ExprPtr& e);    // DivisionByZero
void certify_nonnegative(const ExprPtr& e); // NegativeRadicand

} // namespace detail

} // namespace sulva
