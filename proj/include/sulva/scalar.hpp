#pragma once

#include <memory>
#include <optional>
#include <string>

#include "sulva/rational.hpp"

namespace sulva {

namespace detail {

enum class ExprKind : unsigned char { Leaf, Add, Sub, Mul, Div, Sqrt };

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    ExprKind kind;
    Rational leaf;    // valid when kind == Leaf
    ExprPtr lhs, rhs; // rhs null for Sqrt

    Expr(ExprKind k, Rational v) : kind(k), leaf(std::move(v)) {}
    Expr(ExprKind k, ExprPtr a, ExprPtr b) : kind(k), lhs(std::move(a)), rhs(std::move(b)) {}
};

bool structurally_equal(const ExprPtr& a, const ExprPtr& b);

/// Value a + b*sqrt(m) with m a square-free integer > 1 whenever b != 0
/// (m == 1 for plain rationals). Only expressions confined to a single
/// quadratic extension have such a form.
struct SurdForm {
    Rational a;
    Rational b;
    mpz_class m{1};

    bool is_rational() const { return b.is_zero(); }
    bool is_zero() const { return a.is_zero() && b.is_zero(); }
    int sign() const;
};

/// Attempts the single-surd normal form; nullopt when the expression
/// leaves Q(sqrt(m)) or a radicand cannot be certified square-free.
std::optional<SurdForm> surd_form(const ExprPtr& e);

} // namespace detail

/// Exact constructible number: a DAG over rationals closed under
/// +, -, *, / and square roots. Immutable and cheap to copy.
class Scalar {
public:
    Scalar() : Scalar(Rational(0)) {}
    Scalar(long n) : Scalar(Rational(n)) {}
    Scalar(const Rational& r);

    const detail::ExprPtr& node() const { return node_; }

    /// Exact rational value when the expression provably has one.
    std::optional<Rational> rational_value() const;
    bool is_rational_leaf() const { return node_->kind == detail::ExprKind::Leaf; }

    Scalar operator-() const;
    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    /// Throws DivisionByZero unless the divisor is certified nonzero.
    friend Scalar operator/(const Scalar& a, const Scalar& b);

    /// Parseable exact form, e.g. "(2 + sqrt(2))/6".
    std::string expression_string() const;

private:
    explicit Scalar(detail::ExprPtr node) : node_(std::move(node)) {}
    detail::ExprPtr node_;

    friend Scalar sqrt(const Scalar&);
};

/// Exact square root. Throws NegativeRadicand unless the operand is
/// certified nonnegative; perfect squares of rationals collapse.
Scalar sqrt(const Scalar& x);

inline Scalar square(const Scalar& x) { return x * x; }

} // namespace sulva
