#include "sulva/scalar.hpp"

#include <unordered_map>

#include "sulva/interval.hpp"

namespace sulva {
namespace detail {

bool structurally_equal(const ExprPtr& a, const ExprPtr& b) {
    if (a.get() == b.get())
        return true;
    if (!a || !b || a->kind != b->kind)
        return false;
    if (a->kind == ExprKind::Leaf)
        return a->leaf == b->leaf;
    if (a->kind == ExprKind::Sqrt)
        return structurally_equal(a->lhs, b->lhs);
    return structurally_equal(a->lhs, b->lhs) && structurally_equal(a->rhs, b->rhs);
}

int SurdForm::sign() const {
    if (b.is_zero())
        return a.sign();
    if (a.is_zero())
        return b.sign();
    if (a.sign() > 0 && b.sign() > 0)
        return 1;
    if (a.sign() < 0 && b.sign() < 0)
        return -1;
    // Mixed signs: compare a^2 with b^2*m. They cannot be equal, since
    // m is square-free > 1 and a, b are nonzero rationals.
    Rational lhs = a * a;
    Rational rhs = b * b * Rational(m, 1);
    int c = lhs > rhs ? 1 : -1;
    return a.sign() > 0 ? c : -c;
}

namespace {

constexpr unsigned long kTrialLimit = 100000;

// n = k^2 * m with m having no square divisor that trial division up to
// kTrialLimit (plus a whole-square check) can find. `certified` is true
// when m is guaranteed square-free, which is what sign/zero decisions need.
struct SquareFree {
    mpz_class k;
    mpz_class m;
    bool certified;
};

SquareFree square_free_part(mpz_class n) {
    SquareFree out{1, 1, true};
    if (n <= 0) {
        out.m = n;
        return out;
    }
    if (mpz_perfect_square_p(n.get_mpz_t())) {
        mpz_sqrt(out.k.get_mpz_t(), n.get_mpz_t());
        out.m = 1;
        return out;
    }
    for (unsigned long d = 2; d <= kTrialLimit; ++d) {
        mpz_class dd = mpz_class(d) * d;
        if (dd > n)
            break;
        while (mpz_divisible_p(n.get_mpz_t(), dd.get_mpz_t())) {
            n /= dd;
            out.k *= d;
        }
        if (mpz_perfect_square_p(n.get_mpz_t())) {
            mpz_class r;
            mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
            out.k *= r;
            n = 1;
            break;
        }
    }
    out.m = n;
    // Any prime factor p <= kTrialLimit has been stripped of squares; a
    // hidden square factor would need p^2 > kTrialLimit^2 >= m.
    mpz_class limit_sq = mpz_class(kTrialLimit) * kTrialLimit;
    out.certified = n <= limit_sq;
    return out;
}

// sqrt(q) for q >= 0 rational as c*sqrt(m): sqrt(p/q) = sqrt(p*q)/q.
std::optional<SurdForm> sqrt_of_rational(const Rational& q) {
    if (q.is_negative())
        return std::nullopt;
    if (q.is_zero())
        return SurdForm{Rational(0), Rational(0), 1};
    mpz_class pq = q.numerator() * q.denominator();
    SquareFree sf = square_free_part(pq);
    if (!sf.certified)
        return std::nullopt;
    if (sf.m == 1)
        return SurdForm{Rational(sf.k, q.denominator()), Rational(0), 1};
    return SurdForm{Rational(0), Rational(sf.k, q.denominator()), sf.m};
}

std::optional<SurdForm> combine_mul(const SurdForm& x, const SurdForm& y) {
    if (x.is_rational() || y.is_rational() || x.m == y.m) {
        mpz_class m = x.is_rational() ? y.m : x.m;
        Rational mq(m, 1);
        SurdForm out;
        out.a = x.a * y.a + x.b * y.b * mq;
        out.b = x.a * y.b + x.b * y.a;
        out.m = out.b.is_zero() ? 1 : m;
        return out;
    }
    // Pure radicals with distinct radicands still multiply to one surd.
    if (x.a.is_zero() && y.a.is_zero()) {
        SquareFree sf = square_free_part(x.m * y.m);
        if (!sf.certified)
            return std::nullopt;
        Rational coeff = x.b * y.b * Rational(sf.k, 1);
        if (sf.m == 1)
            return SurdForm{coeff, Rational(0), 1};
        return SurdForm{Rational(0), coeff, sf.m};
    }
    return std::nullopt;
}

std::optional<SurdForm> invert(const SurdForm& x) {
    if (x.is_zero())
        return std::nullopt;
    if (x.is_rational())
        return SurdForm{Rational(1) / x.a, Rational(0), 1};
    // 1/(a + b*sqrt(m)) = (a - b*sqrt(m)) / (a^2 - b^2 m); the denominator
    // is nonzero because sqrt(m) is irrational for square-free m > 1.
    Rational den = x.a * x.a - x.b * x.b * Rational(x.m, 1);
    return SurdForm{x.a / den, -x.b / den, x.m};
}

using Memo = std::unordered_map<const Expr*, std::optional<SurdForm>>;

std::optional<SurdForm> surd_form_rec(const ExprPtr& e, Memo& memo) {
    if (auto it = memo.find(e.get()); it != memo.end())
        return it->second;
    std::optional<SurdForm> out;
    switch (e->kind) {
    case ExprKind::Leaf:
        out = SurdForm{e->leaf, Rational(0), 1};
        break;
    case ExprKind::Sqrt: {
        auto inner = surd_form_rec(e->lhs, memo);
        if (inner && inner->is_rational())
            out = sqrt_of_rational(inner->a);
        break;
    }
    default: {
        auto l = surd_form_rec(e->lhs, memo);
        auto r = surd_form_rec(e->rhs, memo);
        if (!l || !r)
            break;
        switch (e->kind) {
        case ExprKind::Add:
        case ExprKind::Sub: {
            bool sub = e->kind == ExprKind::Sub;
            Rational rb = sub ? -r->b : r->b;
            if (l->is_rational() || r->is_rational() || l->m == r->m) {
                SurdForm s;
                s.a = sub ? l->a - r->a : l->a + r->a;
                s.b = l->b + rb;
                s.m = s.b.is_zero() ? mpz_class(1) : (l->is_rational() ? r->m : l->m);
                out = s;
            }
            break;
        }
        case ExprKind::Mul:
            out = combine_mul(*l, *r);
            break;
        case ExprKind::Div:
            if (auto inv = invert(*r))
                out = combine_mul(*l, *inv);
            break;
        default:
            break;
        }
    }
    }
    memo.emplace(e.get(), out);
    return out;
}

} // namespace

std::optional<SurdForm> surd_form(const ExprPtr& e) {
    Memo memo;
    return surd_form_rec(e, memo);
}

} // namespace detail

using detail::Expr;
using detail::ExprKind;
using detail::ExprPtr;

namespace {

ExprPtr leaf(Rational r) {
    return std::make_shared<Expr>(ExprKind::Leaf, std::move(r));
}

const Rational* as_leaf(const ExprPtr& e) {
    return e->kind == ExprKind::Leaf ? &e->leaf : nullptr;
}

ExprPtr make_sqrt(const ExprPtr& x);

ExprPtr make_binary(ExprKind kind, const ExprPtr& a, const ExprPtr& b) {
    const Rational* la = as_leaf(a);
    const Rational* lb = as_leaf(b);
    if (la && lb) {
        switch (kind) {
        case ExprKind::Add: return leaf(*la + *lb);
        case ExprKind::Sub: return leaf(*la - *lb);
        case ExprKind::Mul: return leaf(*la * *lb);
        case ExprKind::Div:
            if (lb->is_zero())
                fail(Errc::DivisionByZero, "division by zero");
            return leaf(*la / *lb);
        default: break;
        }
    }
    switch (kind) {
    case ExprKind::Add:
        if (la && la->is_zero()) return b;
        if (lb && lb->is_zero()) return a;
        break;
    case ExprKind::Sub:
        if (lb && lb->is_zero()) return a;
        if (detail::structurally_equal(a, b)) return leaf(Rational(0));
        break;
    case ExprKind::Mul:
        if (la && la->is_zero()) return a;
        if (lb && lb->is_zero()) return b;
        if (la && *la == Rational(1)) return b;
        if (lb && *lb == Rational(1)) return a;
        if (a->kind == ExprKind::Sqrt && b->kind == ExprKind::Sqrt) {
            if (detail::structurally_equal(a->lhs, b->lhs))
                return a->lhs;
            // Radicands are nonnegative by construction, so the product
            // of roots is the root of the product; no re-certification.
            ExprPtr prod = make_binary(ExprKind::Mul, a->lhs, b->lhs);
            if (const Rational* lp = as_leaf(prod))
                if (auto root = lp->sqrt_exact())
                    return leaf(*root);
            return std::make_shared<Expr>(ExprKind::Sqrt, prod, nullptr);
        }
        break;
    case ExprKind::Div:
        detail::certify_nonzero(b);
        if (la && la->is_zero()) return a;
        if (lb && *lb == Rational(1)) return a;
        break;
    default:
        break;
    }
    return std::make_shared<Expr>(kind, a, b);
}

ExprPtr make_sqrt(const ExprPtr& x) {
    if (const Rational* lx = as_leaf(x)) {
        if (lx->is_negative())
            fail(Errc::NegativeRadicand, "sqrt of negative rational " + lx->to_string());
        if (auto root = lx->sqrt_exact())
            return leaf(*root);
        return std::make_shared<Expr>(ExprKind::Sqrt, x, nullptr);
    }
    detail::certify_nonnegative(x);
    return std::make_shared<Expr>(ExprKind::Sqrt, x, nullptr);
}

int precedence(ExprKind k) {
    switch (k) {
    case ExprKind::Add:
    case ExprKind::Sub: return 1;
    case ExprKind::Mul:
    case ExprKind::Div: return 2;
    default: return 3;
    }
}

void write_expr(const ExprPtr& e, std::string& out, int parent_prec, bool right_operand) {
    if (e->kind == ExprKind::Leaf) {
        bool needs_parens = e->leaf.is_negative() || (!e->leaf.is_integer() && parent_prec >= 2);
        if (needs_parens) out += '(';
        out += e->leaf.to_string();
        if (needs_parens) out += ')';
        return;
    }
    if (e->kind == ExprKind::Sqrt) {
        out += "sqrt(";
        write_expr(e->lhs, out, 0, false);
        out += ')';
        return;
    }
    int prec = precedence(e->kind);
    bool needs_parens = prec < parent_prec ||
                        (prec == parent_prec && right_operand);
    if (needs_parens) out += '(';
    write_expr(e->lhs, out, prec, false);
    switch (e->kind) {
    case ExprKind::Add: out += " + "; break;
    case ExprKind::Sub: out += " - "; break;
    case ExprKind::Mul: out += "*"; break;
    case ExprKind::Div: out += "/"; break;
    default: break;
    }
    write_expr(e->rhs, out, prec, true);
    if (needs_parens) out += ')';
}

} // namespace

Scalar::Scalar(const Rational& r) : node_(leaf(r)) {}

std::optional<Rational> Scalar::rational_value() const {
    if (node_->kind == ExprKind::Leaf)
        return node_->leaf;
    if (auto form = detail::surd_form(node_); form && form->is_rational())
        return form->a;
    return std::nullopt;
}

Scalar Scalar::operator-() const {
    return Scalar(0) - *this;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    return Scalar(make_binary(ExprKind::Add, a.node_, b.node_));
}

Scalar operator-(const Scalar& a, const Scalar& b) {
    return Scalar(make_binary(ExprKind::Sub, a.node_, b.node_));
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    return Scalar(make_binary(ExprKind::Mul, a.node_, b.node_));
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    return Scalar(make_binary(ExprKind::Div, a.node_, b.node_));
}

Scalar sqrt(const Scalar& x) {
    return Scalar(make_sqrt(x.node()));
}

std::string Scalar::expression_string() const {
    std::string out;
    write_expr(node_, out, 0, false);
    return out;
}

} // namespace sulva
