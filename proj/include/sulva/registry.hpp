#pragma once

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "sulva/analysis.hpp"
#include "sulva/constructions.hpp"
#include "sulva/expr_parse.hpp"

namespace sulva {

enum class ParamKind { ScalarExpr, Int, RationalNum, Method, ScalarList };

struct ParamSpec {
    std::string name;
    ParamKind kind;
    bool required;
    std::string default_text; // parsed like a user argument when absent

    ParamSpec(std::string n, ParamKind k = ParamKind::ScalarExpr, bool req = true,
              std::string def = {})
        : name(std::move(n)), kind(k), required(req), default_text(std::move(def)) {}
};

/// Uniform result any operation can report: named exact scalars (with an
/// optional primary one other bindings may consume), named points,
/// free-form note lines, and renderable traces.
struct OpResult {
    std::vector<std::pair<std::string, Scalar>> scalars;
    std::vector<std::pair<std::string, Point>> points;
    std::vector<std::string> notes;
    std::vector<Trace> traces;
    std::string primary;

    const Scalar* find_scalar(std::string_view name) const;
};

struct Arguments {
    std::map<std::string, Scalar> scalars;
    std::map<std::string, long> ints;
    std::map<std::string, Rational> rationals;
    std::map<std::string, std::string> methods;
    std::map<std::string, std::vector<Scalar>> lists;

    const Scalar& scalar(const std::string& name) const;
    long integer(const std::string& name) const;
    const Rational& rational(const std::string& name) const;
    const std::string& method(const std::string& name) const;
    const std::vector<Scalar>& list(const std::string& name) const;
};

struct OpSpec {
    std::string name; // stable registry name, e.g. "circle-from-square"
    std::string summary;
    std::vector<ParamSpec> params;
    std::function<OpResult(const Arguments&, int precision)> invoke;

    const ParamSpec* find_param(std::string_view pname) const;
};

const std::vector<OpSpec>& operation_registry();
const OpSpec* find_operation(std::string_view name);

/// Parses one textual argument according to the parameter kind and stores
/// it; identifiers inside scalar expressions resolve through `resolver`.
void bind_argument(Arguments& args, const ParamSpec& param, const std::string& text,
                   const NameResolver& resolver);

/// Fills in defaults, then runs the operation.
OpResult invoke_operation(const OpSpec& op, Arguments args, int precision);

} // namespace sulva
