#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "quatcoh/algebra.hpp"

namespace quatcoh {

/// Parses a spec document. Syntax errors report line and column; schema
/// errors report the JSON path of the offending field.
/// Throws SchemaError, CoefficientParseError.
AlgebraSpec parse_spec(std::string_view text);
AlgebraSpec load_spec(const std::string& path);

/// Parses "name=p/q" items. Throws SchemaError on malformed items or names
/// not declared by the spec.
Bindings parse_bindings(const std::vector<std::string>& items, const AlgebraSpec& spec);

/// Serializes a spec back to the document format (round-trips with parse_spec).
std::string dump_spec(const AlgebraSpec& spec);

}  // namespace quatcoh
