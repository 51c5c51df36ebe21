#include "sfckit/st/symbols.hpp"

#include <array>
#include <cctype>

namespace sfckit::st {

namespace {

using core::ident_fold;

constexpr std::array kBuiltins = {
    // Timers and counters
    "ton", "tof", "tp", "ctu", "ctd", "ctud",
    // Edge detection and bistables
    "r_trig", "f_trig", "rs", "sr",
    // Selection and limiting
    "sel", "mux", "min", "max", "limit",
    // Numeric
    "abs", "sqrt", "ln", "log", "exp", "expt", "sin", "cos", "tan",
    "asin", "acos", "atan", "trunc", "move",
    // Bit string
    "shl", "shr", "rol", "ror",
    // Strings
    "len", "left", "right", "mid", "concat", "insert", "delete", "replace", "find",
};

bool is_conversion_name(std::string_view folded) {
  auto pos = folded.find("_to_");
  if (pos == std::string_view::npos || pos == 0) return false;
  return pos + 4 < folded.size();
}

struct Walker {
  const SymbolTable& table;
  const SymbolCheckOptions& opts;
  std::vector<StDiagnostic> out;

  void flag(const std::string& name, Span span) {
    out.push_back({StDiagnostic::Code::UndeclaredIdentifier, name, span,
                   "undeclared identifier '" + name + "'"});
  }

  // Only the base of a dotted path resolves against the interface; members
  // belong to the base's type, which this layer does not model.
  void check_path(const NamePath& p, Span span) {
    if (p.parts.empty()) return;
    if (!table.contains(p.parts[0])) flag(p.parts[0], span);
  }

  void check_callee(const NamePath& p, Span span) {
    if (p.parts.empty()) return;
    const std::string& base = p.parts[0];
    if (table.contains(base)) return;
    if (p.parts.size() == 1 && is_builtin_callable(base, opts)) return;
    flag(base, span);
  }

  void walk_call(const Call& c, Span span) {
    check_callee(c.callee, span);
    for (const auto& a : c.args) {
      if (a.value) walk(*a.value);
    }
  }

  void walk(const Expr& e) {
    if (const auto* p = std::get_if<NamePath>(&e.node)) {
      check_path(*p, e.span);
    } else if (const auto* c = std::get_if<Call>(&e.node)) {
      walk_call(*c, e.span);
    } else if (const auto* b = std::get_if<Binary>(&e.node)) {
      walk(*b->lhs);
      walk(*b->rhs);
    } else if (const auto* u = std::get_if<Unary>(&e.node)) {
      walk(*u->operand);
    }
  }

  void walk_body(const StmtList& body) {
    for (const auto& s : body) walk(*s);
  }

  void walk(const Stmt& s) {
    if (const auto* a = std::get_if<AssignStmt>(&s.node)) {
      check_path(a->target, s.span);
      walk(*a->value);
    } else if (const auto* c = std::get_if<CallStmt>(&s.node)) {
      walk_call(c->call, s.span);
    } else if (const auto* f = std::get_if<IfStmt>(&s.node)) {
      for (const auto& arm : f->arms) {
        walk(*arm.cond);
        walk_body(arm.body);
      }
      if (f->else_body) walk_body(*f->else_body);
    } else if (const auto* c = std::get_if<CaseStmt>(&s.node)) {
      walk(*c->selector);
      for (const auto& arm : c->arms) walk_body(arm.body);
      if (c->else_body) walk_body(*c->else_body);
    } else if (const auto* f = std::get_if<ForStmt>(&s.node)) {
      if (!table.contains(f->var)) flag(f->var, s.span);
      walk(*f->from);
      walk(*f->to);
      if (f->by) walk(*f->by);
      walk_body(f->body);
    } else if (const auto* w = std::get_if<WhileStmt>(&s.node)) {
      walk(*w->cond);
      walk_body(w->body);
    } else if (const auto* r = std::get_if<RepeatStmt>(&s.node)) {
      walk_body(r->body);
      walk(*r->until);
    }
  }
};

}  // namespace

bool SymbolTable::contains(std::string_view name) const {
  return by_name.count(ident_fold(name)) > 0;
}

SymbolTable build_symbol_table(const std::vector<core::VariableDecl>& vars) {
  SymbolTable table;
  for (const auto& v : vars) {
    auto key = ident_fold(v.name);
    auto [it, inserted] = table.by_name.emplace(key, v);
    if (!inserted) {
      table.collisions.push_back({StDiagnostic::Code::DuplicateSymbol, v.name, {},
                                  "identifier '" + v.name + "' declared in more than one section"});
    }
  }
  return table;
}

bool is_builtin_callable(std::string_view name, const SymbolCheckOptions& opts) {
  std::string folded = ident_fold(name);
  for (const char* b : kBuiltins) {
    if (folded == b) return true;
  }
  if (opts.allow_conversions && is_conversion_name(folded)) return true;
  for (const auto& extra : opts.extra_builtins) {
    if (folded == ident_fold(extra)) return true;
  }
  return false;
}

std::vector<StDiagnostic> check_symbols(const StAst& ast, const SymbolTable& table,
                                        const SymbolCheckOptions& opts) {
  Walker w{table, opts};
  for (const auto& s : ast.statements) w.walk(*s);
  return std::move(w.out);
}

std::vector<StDiagnostic> check_symbols(const Expr& expr, const SymbolTable& table,
                                        const SymbolCheckOptions& opts) {
  Walker w{table, opts};
  w.walk(expr);
  return std::move(w.out);
}

}  // namespace sfckit::st
