#include "sulva/interval.hpp"

#include <algorithm>
#include <cstdio>
#include <unordered_map>
#include <vector>

namespace sulva {

BigFloat& BigFloat::operator=(const BigFloat& o) {
    if (this != &o) {
        mpfr_set_prec(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

namespace {

std::string format_digits(std::string digits, long exp10, int significant) {
    // mpfr_get_str semantics: value = 0.digits * 10^exp10.
    bool negative = !digits.empty() && digits[0] == '-';
    if (negative)
        digits.erase(0, 1);
    while (static_cast<int>(digits.size()) > significant)
        digits.pop_back();
    if (digits.find_first_not_of('0') == std::string::npos)
        return "0";
    std::string out;
    if (exp10 > 0 && exp10 <= 12) {
        if (static_cast<long>(digits.size()) <= exp10)
            digits.append(static_cast<size_t>(exp10) - digits.size(), '0');
        out = digits.substr(0, static_cast<size_t>(exp10));
        if (digits.size() > static_cast<size_t>(exp10))
            out += "." + digits.substr(static_cast<size_t>(exp10));
    } else if (exp10 <= 0 && exp10 >= -3) {
        out = "0." + std::string(static_cast<size_t>(-exp10), '0') + digits;
    } else {
        out = digits.substr(0, 1);
        if (digits.size() > 1)
            out += "." + digits.substr(1);
        out += "e" + std::to_string(exp10 - 1);
    }
    return negative ? "-" + out : out;
}

} // namespace

std::string BigFloat::to_decimal(int significant) const {
    if (mpfr_zero_p(v_))
        return "0";
    mpfr_exp_t exp = 0;
    char* raw = mpfr_get_str(nullptr, &exp, 10, static_cast<size_t>(significant), v_, MPFR_RNDN);
    std::string digits(raw);
    mpfr_free_str(raw);
    return format_digits(std::move(digits), exp, significant);
}

std::string BigFloat::to_fixed(int places) const {
    char* out = nullptr;
    mpfr_asprintf(&out, "%.*R*f", places, MPFR_RNDN, v_);
    std::string s(out);
    mpfr_free_str(out);
    return s;
}

std::string BigFloat::to_scientific(int significant) const {
    char* out = nullptr;
    mpfr_asprintf(&out, "%+.*R*e", significant - 1, MPFR_RNDN, v_);
    std::string s(out);
    mpfr_free_str(out);
    return s;
}

BigFloat Interval::width() const {
    BigFloat w(64);
    mpfr_sub(w.get(), upper.get(), lower.get(), MPFR_RNDU);
    return w;
}

BigFloat Interval::midpoint() const {
    mpfr_prec_t prec = std::max(mpfr_get_prec(lower.get()), mpfr_get_prec(upper.get())) + 1;
    BigFloat m(prec);
    mpfr_add(m.get(), lower.get(), upper.get(), MPFR_RNDN);
    mpfr_div_ui(m.get(), m.get(), 2, MPFR_RNDN);
    return m;
}

std::string Interval::to_string(int significant) const {
    return "[" + lower.to_decimal(significant) + ", " + upper.to_decimal(significant) + "]";
}

const char* to_string(CompareResult r) {
    switch (r) {
    case CompareResult::Less: return "Less";
    case CompareResult::Equal: return "Equal";
    case CompareResult::Greater: return "Greater";
    case CompareResult::Undecided: return "Undecided";
    }
    return "?";
}

namespace detail {
namespace {

// One enclosure during DAG evaluation at a fixed working precision.
struct Box {
    BigFloat lo, hi;
    Box() = default;
    explicit Box(mpfr_prec_t prec) : lo(prec), hi(prec) {}
};

struct NeedMoreBits {};

Box box_from_rational(const Rational& q, mpfr_prec_t prec) {
    Box r(prec);
    mpfr_set_q(r.lo.get(), q.value().get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi.get(), q.value().get_mpq_t(), MPFR_RNDU);
    return r;
}

Box box_add(const Box& a, const Box& b, mpfr_prec_t prec) {
    Box r(prec);
    mpfr_add(r.lo.get(), a.lo.get(), b.lo.get(), MPFR_RNDD);
    mpfr_add(r.hi.get(), a.hi.get(), b.hi.get(), MPFR_RNDU);
    return r;
}

Box box_sub(const Box& a, const Box& b, mpfr_prec_t prec) {
    Box r(prec);
    mpfr_sub(r.lo.get(), a.lo.get(), b.hi.get(), MPFR_RNDD);
    mpfr_sub(r.hi.get(), a.hi.get(), b.lo.get(), MPFR_RNDU);
    return r;
}

Box box_mul(const Box& a, const Box& b, mpfr_prec_t prec) {
    Box r(prec);
    BigFloat t(prec);
    const mpfr_srcptr as[2] = {a.lo.get(), a.hi.get()};
    const mpfr_srcptr bs[2] = {b.lo.get(), b.hi.get()};
    bool first = true;
    for (auto x : as)
        for (auto y : bs) {
            mpfr_mul(t.get(), x, y, MPFR_RNDD);
            if (first || mpfr_cmp(t.get(), r.lo.get()) < 0)
                mpfr_set(r.lo.get(), t.get(), MPFR_RNDD);
            mpfr_mul(t.get(), x, y, MPFR_RNDU);
            if (first || mpfr_cmp(t.get(), r.hi.get()) > 0)
                mpfr_set(r.hi.get(), t.get(), MPFR_RNDU);
            first = false;
        }
    return r;
}

Box box_div(const Box& a, const Box& b, mpfr_prec_t prec) {
    if (mpfr_sgn(b.lo.get()) <= 0 && mpfr_sgn(b.hi.get()) >= 0)
        throw NeedMoreBits{}; // divisor enclosure straddles zero at this precision
    Box r(prec);
    BigFloat t(prec);
    const mpfr_srcptr as[2] = {a.lo.get(), a.hi.get()};
    const mpfr_srcptr bs[2] = {b.lo.get(), b.hi.get()};
    bool first = true;
    for (auto x : as)
        for (auto y : bs) {
            mpfr_div(t.get(), x, y, MPFR_RNDD);
            if (first || mpfr_cmp(t.get(), r.lo.get()) < 0)
                mpfr_set(r.lo.get(), t.get(), MPFR_RNDD);
            mpfr_div(t.get(), x, y, MPFR_RNDU);
            if (first || mpfr_cmp(t.get(), r.hi.get()) > 0)
                mpfr_set(r.hi.get(), t.get(), MPFR_RNDU);
            first = false;
        }
    return r;
}

Box box_sqrt(const Box& a, mpfr_prec_t prec) {
    // Construction certifies the radicand nonnegative; a slightly negative
    // lower bound is rounding slack and is clamped.
    Box r(prec);
    if (mpfr_sgn(a.lo.get()) < 0)
        mpfr_set_zero(r.lo.get(), 1);
    else
        mpfr_sqrt(r.lo.get(), a.lo.get(), MPFR_RNDD);
    mpfr_sqrt(r.hi.get(), a.hi.get(), MPFR_RNDU);
    return r;
}

Box eval_box(const ExprPtr& e, mpfr_prec_t prec,
             std::unordered_map<const Expr*, Box>& memo) {
    if (auto it = memo.find(e.get()); it != memo.end())
        return it->second;
    Box out;
    switch (e->kind) {
    case ExprKind::Leaf:
        out = box_from_rational(e->leaf, prec);
        break;
    case ExprKind::Sqrt:
        out = box_sqrt(eval_box(e->lhs, prec, memo), prec);
        break;
    case ExprKind::Add:
        out = box_add(eval_box(e->lhs, prec, memo), eval_box(e->rhs, prec, memo), prec);
        break;
    case ExprKind::Sub:
        out = box_sub(eval_box(e->lhs, prec, memo), eval_box(e->rhs, prec, memo), prec);
        break;
    case ExprKind::Mul:
        out = box_mul(eval_box(e->lhs, prec, memo), eval_box(e->rhs, prec, memo), prec);
        break;
    case ExprKind::Div:
        out = box_div(eval_box(e->lhs, prec, memo), eval_box(e->rhs, prec, memo), prec);
        break;
    }
    memo.emplace(e.get(), out);
    return out;
}

// All evaluations share one precision ladder so that enclosures computed
// at a higher rung nest inside those from a lower rung.
constexpr mpfr_prec_t kBaseRung = 128;
constexpr mpfr_prec_t kMaxRung = mpfr_prec_t(1) << 24;

mpfr_prec_t start_rung(int digits) {
    mpfr_prec_t needed = static_cast<mpfr_prec_t>(digits) * 10 / 3 + 32;
    mpfr_prec_t rung = kBaseRung;
    while (rung < needed)
        rung *= 2;
    return rung;
}

bool width_within(const Box& box, int digits) {
    BigFloat width(64);
    mpfr_sub(width.get(), box.hi.get(), box.lo.get(), MPFR_RNDU);
    BigFloat bound(64);
    mpfr_abs(bound.get(), box.lo.get(), MPFR_RNDD);
    if (mpfr_cmp_ui(bound.get(), 1) < 0)
        mpfr_set_ui(bound.get(), 1, MPFR_RNDD);
    Rational tol = Rational::pow10(1 - static_cast<long>(digits));
    mpfr_mul_q(bound.get(), bound.get(), tol.value().get_mpq_t(), MPFR_RNDD);
    return mpfr_cmp(width.get(), bound.get()) <= 0;
}

Interval evaluate_node(const ExprPtr& e, int digits) {
    if (digits < 1)
        digits = 1;
    for (mpfr_prec_t rung = start_rung(digits); rung <= kMaxRung; rung *= 2) {
        std::unordered_map<const Expr*, Box> memo;
        try {
            Box box = eval_box(e, rung, memo);
            if (!width_within(box, digits))
                continue;
            Interval out;
            out.lower = std::move(box.lo);
            out.upper = std::move(box.hi);
            out.precision_digits = digits;
            return out;
        } catch (NeedMoreBits&) {
            continue;
        }
    }
    fail(Errc::UndecidablePredicate, "interval evaluation did not converge");
}

// Interval padded out to the width the evaluate() contract promises at
// this precision; comparisons are run against these so that "decided"
// means decided at the requested precision, not at the internal one.
Interval padded(const Interval& in, int digits) {
    Interval out = in;
    Rational half = Rational::pow10(1 - static_cast<long>(digits)) / Rational(2);
    BigFloat mag(64);
    mpfr_abs(mag.get(), in.lower.get(), MPFR_RNDU);
    if (mpfr_cmp_ui(mag.get(), 1) < 0)
        mpfr_set_ui(mag.get(), 1, MPFR_RNDU);
    mpfr_mul_q(mag.get(), mag.get(), half.value().get_mpq_t(), MPFR_RNDU);
    mpfr_sub(out.lower.get(), in.lower.get(), mag.get(), MPFR_RNDD);
    mpfr_add(out.upper.get(), in.upper.get(), mag.get(), MPFR_RNDU);
    return out;
}

} // namespace

void certify_nonzero(const ExprPtr& e) {
    if (e->kind == ExprKind::Leaf) {
        if (e->leaf.is_zero())
            fail(Errc::DivisionByZero, "division by zero");
        return;
    }
    if (auto form = surd_form(e)) {
        if (form->is_zero())
            fail(Errc::DivisionByZero, "divisor is symbolically zero");
        return;
    }
    for (int digits : {16, 32, 64, 128, 256}) {
        Interval iv = evaluate_node(e, digits);
        if (!iv.contains_zero())
            return;
    }
    fail(Errc::DivisionByZero, "divisor sign could not be certified nonzero");
}

void certify_nonnegative(const ExprPtr& e) {
    if (e->kind == ExprKind::Leaf) {
        if (e->leaf.is_negative())
            fail(Errc::NegativeRadicand, "sqrt of negative value");
        return;
    }
    if (auto form = surd_form(e)) {
        if (form->sign() < 0)
            fail(Errc::NegativeRadicand, "radicand is symbolically negative");
        return;
    }
    for (int digits : {16, 32, 64, 128, 256}) {
        Interval iv = evaluate_node(e, digits);
        if (iv.lower.sign() >= 0)
            return;
        if (iv.upper.sign() < 0)
            fail(Errc::NegativeRadicand, "radicand is negative");
    }
    fail(Errc::NegativeRadicand, "radicand sign could not be certified nonnegative");
}

} // namespace detail

Interval evaluate(const Scalar& x, int precision_digits) {
    return detail::evaluate_node(x.node(), precision_digits);
}

CompareResult compare(const Scalar& a, const Scalar& b, int max_precision_digits) {
    if (detail::structurally_equal(a.node(), b.node()))
        return CompareResult::Equal;
    Scalar diff = a - b;
    if (auto form = detail::surd_form(diff.node())) {
        if (form->is_zero())
            return CompareResult::Equal;
    }
    std::vector<int> ladder;
    for (int p = 16; p < max_precision_digits; p *= 2)
        ladder.push_back(p);
    if (ladder.empty() || ladder.back() != max_precision_digits)
        ladder.push_back(max_precision_digits);
    for (int p : ladder) {
        Interval ia = detail::padded(evaluate(a, p), p);
        Interval ib = detail::padded(evaluate(b, p), p);
        if (ia.upper.cmp(ib.lower) < 0)
            return CompareResult::Less;
        if (ia.lower.cmp(ib.upper) > 0)
            return CompareResult::Greater;
    }
    return CompareResult::Undecided;
}

namespace {

template <typename Render>
std::string certified_render(const Scalar& x, Render render, int final_digits) {
    for (int extra : {4, 12, 28, 60}) {
        Interval iv = evaluate(x, final_digits + extra);
        std::string lo = render(iv.lower);
        std::string hi = render(iv.upper);
        if (lo == hi)
            return lo;
    }
    // Value sits essentially on a rounding boundary; report the midpoint
    // of the tightest enclosure (deterministic: evaluation is a pure
    // function of the expression and the digit request).
    Interval iv = evaluate(x, final_digits + 60);
    return render(iv.midpoint());
}

} // namespace

std::string to_decimal(const Scalar& x, int significant_digits) {
    if (auto q = x.rational_value())
        return q->to_decimal(significant_digits);
    return certified_render(
        x, [&](const BigFloat& f) { return f.to_decimal(significant_digits); },
        significant_digits);
}

std::string to_fixed(const Scalar& x, int places) {
    if (auto q = x.rational_value())
        return q->to_fixed(places);
    return certified_render(
        x, [&](const BigFloat& f) { return f.to_fixed(places); },
        places + 2);
}

std::string to_scientific(const Scalar& x, int significant_digits) {
    if (auto q = x.rational_value()) {
        if (q->is_zero())
            return "+0." + std::string(static_cast<size_t>(significant_digits - 1), '0') + "e+00";
    }
    return certified_render(
        x, [&](const BigFloat& f) { return f.to_scientific(significant_digits); },
        significant_digits + 6);
}

} // namespace sulva
