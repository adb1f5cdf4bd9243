#pragma once

#include <string>
#include <variant>
#include <vector>

#include "sulva/registry.hpp"

namespace sulva {

/// Script-level failures carry the source position and a kind the CLI
/// maps onto exit codes. Parse-time kinds: Syntax, UnknownOperation,
/// UnboundName, ArityMismatch. Runtime construction failures are rethrown
/// as Error with the binding name attached.
class ScriptError : public std::runtime_error {
public:
    enum class Kind { Syntax, UnknownOperation, UnboundName, ArityMismatch };

    ScriptError(Kind kind, int line, int column, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ":" + std::to_string(column) +
                             ": " + kind_name(kind) + ": " + message),
          kind_(kind), line_(line), column_(column) {}

    Kind kind() const { return kind_; }
    int line() const { return line_; }
    int column() const { return column_; }

    static const char* kind_name(Kind k) {
        switch (k) {
        case Kind::Syntax: return "SyntaxError";
        case Kind::UnknownOperation: return "UnknownOperation";
        case Kind::UnboundName: return "UnboundName";
        case Kind::ArityMismatch: return "ArityMismatch";
        }
        return "?";
    }

private:
    Kind kind_;
    int line_, column_;
};

struct LetStatement {
    std::string name;
    std::string op;
    std::vector<std::pair<std::string, std::string>> args; // param -> source text
    int line = 0, column = 0;
};

struct RenderDirective {
    std::vector<std::string> bindings;
    std::string file;
    int precision = 0; // 0 = use run precision
    int line = 0;
};

struct ReportDirective {
    ReportFormat format = ReportFormat::Text;
    std::string file;
    int line = 0;
};

using Statement = std::variant<LetStatement, RenderDirective, ReportDirective>;

struct Script {
    std::vector<Statement> statements;
};

/// Parses and fully validates a script: operation names against the
/// registry, argument names and arity, bound names, expression syntax.
Script parse_script(const std::string& source);

/// Canonical text form; parse(unparse(parse(s))) == parse(s).
std::string unparse_script(const Script& script);

struct RunOutcome {
    std::vector<std::pair<std::string, OpResult>> bindings;
    std::vector<std::pair<std::string, std::string>> files; // name -> content (svg, reports)
};

/// Executes bindings in order. Construction errors surface as Error,
/// prefixed with the binding name and line.
RunOutcome run_script(const Script& script, int precision);

} // namespace sulva
