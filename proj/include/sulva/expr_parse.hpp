#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "sulva/scalar.hpp"

namespace sulva {

/// Maps an identifier appearing in an expression to its value.
/// Must throw if the name is unknown.
using NameResolver = std::function<Scalar(const std::string&)>;

/// Parses an exact arithmetic expression over integers: +, -, *, /,
/// sqrt(...), parentheses and optional identifiers. Decimal literals are
/// rejected; rationals are written as quotients ("13/15"). Throws
/// Error(InvalidArgument) with a character position on bad syntax.
Scalar parse_expression(std::string_view text, const NameResolver& resolver = {});

/// Identifiers referenced by an expression, in first-appearance order.
/// Validates the syntax as a side effect.
std::vector<std::string> expression_identifiers(std::string_view text);

} // namespace sulva
