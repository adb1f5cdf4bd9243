#include "sulva/expr_parse.hpp"

#include <cctype>

#include "sulva/errors.hpp"

namespace sulva {

namespace {

// One grammar, two modes: evaluating (builds exact scalars) and
// syntax-only (collects identifiers, performs no arithmetic, so value
// errors like 1/0 surface at run time rather than parse time).
struct Parser {
    std::string_view text;
    size_t pos = 0;
    const NameResolver* resolver = nullptr;
    std::vector<std::string>* idents = nullptr;

    bool syntax_only() const { return idents != nullptr; }

    [[noreturn]] void error(const std::string& msg) const {
        fail(Errc::InvalidArgument,
             msg + " at position " + std::to_string(pos + 1) + " in '" + std::string(text) + "'");
    }

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    Scalar parse_expr() {
        Scalar v = parse_term();
        for (;;) {
            if (eat('+')) {
                Scalar r = parse_term();
                if (!syntax_only())
                    v = v + r;
            } else if (eat('-')) {
                Scalar r = parse_term();
                if (!syntax_only())
                    v = v - r;
            } else {
                return v;
            }
        }
    }

    Scalar parse_term() {
        Scalar v = parse_unary();
        for (;;) {
            if (eat('*')) {
                Scalar r = parse_unary();
                if (!syntax_only())
                    v = v * r;
            } else if (eat('/')) {
                Scalar r = parse_unary();
                if (!syntax_only())
                    v = v / r;
            } else {
                return v;
            }
        }
    }

    Scalar parse_unary() {
        if (eat('-')) {
            Scalar v = parse_unary();
            return syntax_only() ? v : -v;
        }
        return parse_primary();
    }

    Scalar parse_primary() {
        skip_ws();
        if (pos >= text.size())
            error("unexpected end of expression");
        char c = text[pos];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                ++pos;
            if (pos < text.size() && text[pos] == '.')
                error("decimal literals are not accepted; use a quotient like 17/10");
            if (syntax_only())
                return Scalar(1);
            mpz_class n(std::string(text.substr(start, pos - start)));
            return Scalar(Rational(n, 1));
        }
        if (c == '(') {
            ++pos;
            Scalar v = parse_expr();
            if (!eat(')'))
                error("missing ')'");
            return v;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos;
            while (pos < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
                ++pos;
            std::string name(text.substr(start, pos - start));
            if (name == "sqrt") {
                if (!eat('('))
                    error("sqrt needs parentheses");
                Scalar v = parse_expr();
                if (!eat(')'))
                    error("missing ')' after sqrt argument");
                return syntax_only() ? Scalar(1) : sqrt(v);
            }
            if (syntax_only()) {
                bool seen = false;
                for (const auto& s : *idents)
                    seen = seen || s == name;
                if (!seen)
                    idents->push_back(name);
                return Scalar(1);
            }
            if (resolver && *resolver)
                return (*resolver)(name);
            error("unknown name '" + name + "'");
        }
        error(std::string("unexpected character '") + c + "'");
    }

    Scalar run() {
        Scalar v = parse_expr();
        skip_ws();
        if (pos != text.size())
            error("trailing input");
        return v;
    }
};

} // namespace

Scalar parse_expression(std::string_view text, const NameResolver& resolver) {
    Parser p;
    p.text = text;
    p.resolver = &resolver;
    return p.run();
}

std::vector<std::string> expression_identifiers(std::string_view text) {
    std::vector<std::string> out;
    Parser p;
    p.text = text;
    p.idents = &out;
    p.run();
    return out;
}

} // namespace sulva
