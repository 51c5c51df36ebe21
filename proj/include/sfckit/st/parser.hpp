#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sfckit/st/ast.hpp"

namespace sfckit::st {

struct ParseError {
  Span span;                          // location of the offending token
  std::string found;                  // token text or "end of input"
  std::vector<std::string> expected;  // expected-token set, deduplicated
  std::string message;
};

struct StatementsResult {
  std::optional<StAst> ast;
  std::optional<ParseError> error;

  bool ok() const { return ast.has_value(); }
};

struct ExpressionResult {
  ExprPtr expr;
  std::optional<ParseError> error;

  bool ok() const { return expr != nullptr; }
};

// Parses a statement list covering the whole input (trailing input is an error).
StatementsResult parse_statements(std::string_view src);

// Expression-only parse, e.g. a transition guard. Syntax only; no typing.
ExpressionResult parse_expression(std::string_view src);

}  // namespace sfckit::st
