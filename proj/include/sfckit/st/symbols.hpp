#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "sfckit/core/model.hpp"
#include "sfckit/st/ast.hpp"

namespace sfckit::st {

struct StDiagnostic {
  enum class Code { UndeclaredIdentifier, DuplicateSymbol };
  Code code = Code::UndeclaredIdentifier;
  std::string name;
  Span span;
  std::string message;
};

// Merged variable interface, keyed by case-folded identifier.
struct SymbolTable {
  std::unordered_map<std::string, core::VariableDecl> by_name;
  std::vector<StDiagnostic> collisions;  // duplicates across sections

  bool contains(std::string_view name) const;
};

SymbolTable build_symbol_table(const std::vector<core::VariableDecl>& vars);

struct SymbolCheckOptions {
  std::vector<std::string> extra_builtins;
  bool allow_conversions = true;  // treat X_TO_Y names as standard conversions
};

// One UndeclaredIdentifier diagnostic per unresolved name occurrence. Callee
// names resolve against the table and the builtin allowlist (standard timers,
// counters, edge detectors, selection and math functions).
std::vector<StDiagnostic> check_symbols(const StAst& ast, const SymbolTable& table,
                                        const SymbolCheckOptions& opts = {});
std::vector<StDiagnostic> check_symbols(const Expr& expr, const SymbolTable& table,
                                        const SymbolCheckOptions& opts = {});

bool is_builtin_callable(std::string_view name, const SymbolCheckOptions& opts = {});

}  // namespace sfckit::st
