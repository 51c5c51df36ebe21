#pragma once

#include <string>

#include "sfckit/st/ast.hpp"

namespace sfckit::st {

// Canonical re-print with full parenthesization of every compound expression.
// Re-parsing the output yields a structurally identical tree.
std::string print(const Expr& expr);
std::string print(const StAst& ast);

}  // namespace sfckit::st
