#pragma once

#include <string>
#include <vector>

#include "rht/cdga.hpp"

namespace rht {

/// Parse failure with position information, reported as the CLI diagnostic.
struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(int line_, int col_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ", column " + std::to_string(col_) +
                             ": " + what_),
          line(line_),
          column(col_) {}
};

struct ParsedModel {
    Cdga model;
    std::vector<std::string> warnings;  // non-strict minimality findings
};

/// Model file grammar, one directive per line:
///   gen <name> <degree>
///   d <name> = <expression>
/// Comments start with '#'. Expressions combine rational literals (p/q or
/// integers), declared generator names, '*', '+', '-' and parentheses.
/// Differentials must be homogeneous of degree deg+1 and square to zero;
/// violations abort with a diagnostic. With strict_minimal, differentials
/// with indecomposable terms are rejected too; otherwise they produce
/// warnings.
ParsedModel parse_model(const std::string& text, bool strict_minimal = false);

/// Canonical text form; parse(emit(m)) reproduces m and emit is idempotent
/// over parse.
std::string emit_model(const Cdga& model);

/// Expression parser over an existing model, used for --classes arguments.
Element parse_expression(const Cdga& model, const std::string& text);

}  // namespace rht
