#include "sulva/script.hpp"

#include <cctype>
#include <map>
#include <sstream>

#include "sulva/render.hpp"

namespace sulva {

namespace {

struct Cursor {
    const std::string& text;
    size_t pos = 0;
    int line = 1;
    int col = 1;

    bool done() const { return pos >= text.size(); }
    char peek() const { return done() ? '\0' : text[pos]; }

    char advance() {
        char c = text[pos++];
        if (c == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        return c;
    }

    void skip_blank_in_line() {
        while (!done() && (peek() == ' ' || peek() == '\t' || peek() == '\r'))
            advance();
        if (peek() == '#')
            while (!done() && peek() != '\n')
                advance();
    }

    [[noreturn]] void error(ScriptError::Kind kind, const std::string& msg) const {
        throw ScriptError(kind, line, col, msg);
    }

    bool at_statement_end() {
        skip_blank_in_line();
        return done() || peek() == '\n' || peek() == ';';
    }

    void expect_statement_end() {
        if (!at_statement_end())
            error(ScriptError::Kind::Syntax, "unexpected trailing input");
        if (!done())
            advance();
    }

    std::string ident(const char* what, bool allow_hyphen = false) {
        skip_blank_in_line();
        if (done() || !(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_'))
            error(ScriptError::Kind::Syntax, std::string("expected ") + what);
        std::string out;
        while (!done()) {
            char c = peek();
            bool ok = std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
                      (allow_hyphen && c == '-');
            if (!ok)
                break;
            out += advance();
        }
        return out;
    }

    bool eat(char c) {
        skip_blank_in_line();
        if (!done() && peek() == c) {
            advance();
            return true;
        }
        return false;
    }

    void expect(char c, const char* what) {
        if (!eat(c))
            error(ScriptError::Kind::Syntax, std::string("expected '") + c + "' " + what);
    }

    std::string quoted_string() {
        skip_blank_in_line();
        if (peek() != '"')
            error(ScriptError::Kind::Syntax, "expected a quoted file name");
        advance();
        std::string out;
        while (!done() && peek() != '"' && peek() != '\n')
            out += advance();
        if (peek() != '"')
            error(ScriptError::Kind::Syntax, "unterminated string");
        advance();
        return out;
    }

    // Raw argument text up to a top-level ',' or ')'; brackets and parens
    // nest. The expression grammar proper runs over this slice.
    std::string arg_text() {
        skip_blank_in_line();
        std::string out;
        int depth = 0;
        while (!done()) {
            char c = peek();
            if (c == '\n')
                error(ScriptError::Kind::Syntax, "argument list not closed");
            if (depth == 0 && (c == ',' || c == ')'))
                break;
            if (c == '(' || c == '[')
                ++depth;
            if (c == ')' || c == ']')
                --depth;
            out += advance();
        }
        while (!out.empty() && (out.back() == ' ' || out.back() == '\t'))
            out.pop_back();
        return out;
    }
};

const std::vector<std::string> kMethodNames{"fine", "coarse", "maitrayaniya"};

void validate_argument(const Cursor& at, const OpSpec& op, const ParamSpec& param,
                       const std::string& text,
                       const std::vector<std::string>& bound_names) {
    if (text.empty())
        throw ScriptError(ScriptError::Kind::Syntax, at.line, at.col,
                          "empty argument '" + param.name + "'");
    if (param.kind == ParamKind::Method) {
        for (const auto& m : kMethodNames)
            if (text == m)
                return;
        throw ScriptError(ScriptError::Kind::Syntax, at.line, at.col,
                          "unknown method '" + text + "' for '" + op.name + "'");
    }
    std::string body = text;
    if (param.kind == ParamKind::ScalarList) {
        if (body.size() >= 2 && body.front() == '[' && body.back() == ']')
            body = body.substr(1, body.size() - 2);
        if (body.find_first_not_of(" \t") == std::string::npos)
            return;
    }
    // Validate syntax and referenced names without computing values.
    std::vector<std::string> idents;
    try {
        if (param.kind == ParamKind::ScalarList) {
            size_t start = 0;
            int depth = 0;
            for (size_t i = 0; i <= body.size(); ++i) {
                if (i < body.size() && body[i] == '(') ++depth;
                if (i < body.size() && body[i] == ')') --depth;
                if (i == body.size() || (body[i] == ',' && depth == 0)) {
                    for (const auto& id : expression_identifiers(body.substr(start, i - start)))
                        idents.push_back(id);
                    start = i + 1;
                }
            }
        } else {
            idents = expression_identifiers(body);
        }
    } catch (const Error& e) {
        throw ScriptError(ScriptError::Kind::Syntax, at.line, at.col, e.what());
    }
    for (const auto& id : idents) {
        bool bound = false;
        for (const auto& name : bound_names)
            bound = bound || name == id;
        if (!bound)
            throw ScriptError(ScriptError::Kind::UnboundName, at.line, at.col,
                              "name '" + id + "' is not bound");
    }
}

} // namespace

Script parse_script(const std::string& source) {
    Script script;
    Cursor cur{source};
    std::vector<std::string> bound_names;

    while (!cur.done()) {
        cur.skip_blank_in_line();
        if (cur.done())
            break;
        if (cur.peek() == '\n' || cur.peek() == ';') {
            cur.advance();
            continue;
        }
        int stmt_line = cur.line, stmt_col = cur.col;
        std::string head = cur.ident("a statement");

        if (head == "let") {
            LetStatement let;
            let.line = stmt_line;
            let.column = stmt_col;
            let.name = cur.ident("a binding name");
            cur.expect('=', "after the binding name");
            let.op = cur.ident("an operation name", /*allow_hyphen=*/true);
            const OpSpec* op = find_operation(let.op);
            if (!op)
                throw ScriptError(ScriptError::Kind::UnknownOperation, stmt_line, stmt_col,
                                  "no operation named '" + let.op + "'");
            cur.expect('(', "to open the argument list");
            if (!cur.eat(')')) {
                for (;;) {
                    std::string pname = cur.ident("an argument name", /*allow_hyphen=*/true);
                    cur.expect(':', "after the argument name");
                    const ParamSpec* param = op->find_param(pname);
                    if (!param)
                        throw ScriptError(ScriptError::Kind::ArityMismatch, cur.line, cur.col,
                                          "'" + let.op + "' has no argument '" + pname + "'");
                    for (const auto& [seen, _] : let.args)
                        if (seen == pname)
                            throw ScriptError(ScriptError::Kind::ArityMismatch, cur.line, cur.col,
                                              "argument '" + pname + "' given twice");
                    std::string text = cur.arg_text();
                    validate_argument(cur, *op, *param, text, bound_names);
                    let.args.emplace_back(pname, text);
                    if (cur.eat(')'))
                        break;
                    if (!cur.eat(','))
                        cur.error(ScriptError::Kind::Syntax, "expected ',' or ')'");
                }
            }
            for (const auto& param : op->params)
                if (param.required) {
                    bool given = false;
                    for (const auto& [pname, _] : let.args)
                        given = given || pname == param.name;
                    if (!given)
                        throw ScriptError(ScriptError::Kind::ArityMismatch, stmt_line, stmt_col,
                                          "'" + let.op + "' needs argument '" + param.name + "'");
                }
            cur.expect_statement_end();
            bound_names.push_back(let.name);
            script.statements.push_back(std::move(let));
            continue;
        }

        if (head == "render") {
            RenderDirective render;
            render.line = stmt_line;
            for (;;) {
                std::string name = cur.ident("a binding name");
                bool bound = false;
                for (const auto& b : bound_names)
                    bound = bound || b == name;
                if (!bound)
                    throw ScriptError(ScriptError::Kind::UnboundName, stmt_line, stmt_col,
                                      "render references unbound name '" + name + "'");
                render.bindings.push_back(name);
                if (!cur.eat(','))
                    break;
            }
            std::string kw = cur.ident("'to'");
            if (kw != "to")
                cur.error(ScriptError::Kind::Syntax, "expected 'to \"file\"'");
            render.file = cur.quoted_string();
            cur.skip_blank_in_line();
            if (!cur.at_statement_end()) {
                std::string pw = cur.ident("'precision'");
                if (pw != "precision")
                    cur.error(ScriptError::Kind::Syntax, "expected 'precision N'");
                cur.skip_blank_in_line();
                std::string digits;
                while (!cur.done() && std::isdigit(static_cast<unsigned char>(cur.peek())))
                    digits += cur.advance();
                if (digits.empty())
                    cur.error(ScriptError::Kind::Syntax, "expected a precision number");
                render.precision = std::stoi(digits);
            }
            cur.expect_statement_end();
            script.statements.push_back(std::move(render));
            continue;
        }

        if (head == "report") {
            ReportDirective report;
            report.line = stmt_line;
            std::string kw = cur.ident("'format'");
            if (kw != "format")
                cur.error(ScriptError::Kind::Syntax, "expected 'format text|json|csv'");
            std::string fmt = cur.ident("a format name");
            auto parsed = report_format_from_name(fmt);
            if (!parsed)
                cur.error(ScriptError::Kind::Syntax, "unknown report format '" + fmt + "'");
            report.format = *parsed;
            std::string to = cur.ident("'to'");
            if (to != "to")
                cur.error(ScriptError::Kind::Syntax, "expected 'to \"file\"'");
            report.file = cur.quoted_string();
            cur.expect_statement_end();
            script.statements.push_back(std::move(report));
            continue;
        }

        throw ScriptError(ScriptError::Kind::Syntax, stmt_line, stmt_col,
                          "unknown statement '" + head + "'");
    }
    return script;
}

std::string unparse_script(const Script& script) {
    std::ostringstream out;
    for (const auto& statement : script.statements) {
        if (const LetStatement* let = std::get_if<LetStatement>(&statement)) {
            out << "let " << let->name << " = " << let->op << "(";
            for (size_t i = 0; i < let->args.size(); ++i) {
                if (i)
                    out << ", ";
                out << let->args[i].first << ": " << let->args[i].second;
            }
            out << ")\n";
        } else if (const RenderDirective* render = std::get_if<RenderDirective>(&statement)) {
            out << "render ";
            for (size_t i = 0; i < render->bindings.size(); ++i) {
                if (i)
                    out << ", ";
                out << render->bindings[i];
            }
            out << " to \"" << render->file << "\"";
            if (render->precision > 0)
                out << " precision " << render->precision;
            out << "\n";
        } else if (const ReportDirective* report = std::get_if<ReportDirective>(&statement)) {
            const char* name = report->format == ReportFormat::Text    ? "text"
                               : report->format == ReportFormat::Json ? "json"
                                                                      : "csv";
            out << "report format " << name << " to \"" << report->file << "\"\n";
        }
    }
    return out.str();
}

RunOutcome run_script(const Script& script, int precision) {
    RunOutcome outcome;
    std::map<std::string, size_t> env; // binding name -> index in outcome.bindings

    for (const auto& statement : script.statements) {
        if (const LetStatement* let = std::get_if<LetStatement>(&statement)) {
            const OpSpec* op = find_operation(let->op);
            if (!op)
                fail(Errc::InvalidArgument, "operation vanished from registry: " + let->op);
            NameResolver resolver = [&](const std::string& name) -> Scalar {
                auto it = env.find(name);
                if (it == env.end())
                    fail(Errc::InvalidArgument, "unbound name '" + name + "'");
                const OpResult& r = outcome.bindings[it->second].second;
                if (r.primary.empty())
                    fail(Errc::InvalidArgument,
                         "binding '" + name + "' has no scalar value to use here");
                return *r.find_scalar(r.primary);
            };
            try {
                Arguments args;
                for (const auto& [pname, text] : let->args)
                    bind_argument(args, *op->find_param(pname), text, resolver);
                OpResult result = invoke_operation(*op, std::move(args), precision);
                outcome.bindings.emplace_back(let->name, std::move(result));
                env[let->name] = outcome.bindings.size() - 1;
            } catch (const Error& e) {
                throw Error(e.code(), "in binding '" + let->name + "' (line " +
                                          std::to_string(let->line) + "): " + e.what());
            }
        } else if (const RenderDirective* render = std::get_if<RenderDirective>(&statement)) {
            std::vector<Trace> traces;
            for (const auto& name : render->bindings) {
                auto it = env.find(name);
                if (it == env.end())
                    fail(Errc::InvalidArgument, "render references unbound name '" + name + "'");
                const OpResult& bound = outcome.bindings[it->second].second;
                if (bound.traces.empty())
                    fail(Errc::EmptyTraceSet,
                         "binding '" + name + "' produced no figure to render");
                for (const auto& t : bound.traces)
                    traces.push_back(t);
            }
            RenderSpec spec;
            if (render->precision > 0)
                spec.label_precision = render->precision;
            outcome.files.emplace_back(render->file, render_svg(traces, spec));
        } else if (const ReportDirective* report = std::get_if<ReportDirective>(&statement)) {
            auto records = builtin_catalog();
            records.push_back(babylonian_sqrt2_record());
            outcome.files.emplace_back(report->file,
                                       emit_error_table(records, precision, report->format));
        }
    }
    return outcome;
}

} // namespace sulva
