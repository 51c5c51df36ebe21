#include "sfckit/st/ast.hpp"

namespace sfckit::st {

namespace {

bool equal_list(const StmtList& a, const StmtList& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!equal(*a[i], *b[i])) return false;
  }
  return true;
}

bool equal_opt_list(const std::optional<StmtList>& a, const std::optional<StmtList>& b) {
  if (a.has_value() != b.has_value()) return false;
  return !a || equal_list(*a, *b);
}

bool equal_ptr(const ExprPtr& a, const ExprPtr& b) {
  if ((a == nullptr) != (b == nullptr)) return false;
  return !a || equal(*a, *b);
}

bool equal_path(const NamePath& a, const NamePath& b) { return a.parts == b.parts; }

bool equal_call(const Call& a, const Call& b) {
  if (!equal_path(a.callee, b.callee) || a.args.size() != b.args.size()) return false;
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (a.args[i].name != b.args[i].name) return false;
    if (a.args[i].is_output != b.args[i].is_output) return false;
    if (!equal_ptr(a.args[i].value, b.args[i].value)) return false;
  }
  return true;
}

bool equal_label(const CaseLabel& a, const CaseLabel& b) {
  if (a.value.index() != b.value.index()) return false;
  if (const auto* s = std::get_if<std::string>(&a.value)) {
    return *s == std::get<std::string>(b.value);
  }
  if (const auto* r = std::get_if<CaseLabel::Range>(&a.value)) {
    const auto& rb = std::get<CaseLabel::Range>(b.value);
    return r->lo == rb.lo && r->hi == rb.hi;
  }
  return equal_path(std::get<NamePath>(a.value), std::get<NamePath>(b.value));
}

}  // namespace

bool equal(const Expr& a, const Expr& b) {
  if (a.node.index() != b.node.index()) return false;
  if (const auto* lit = std::get_if<Literal>(&a.node)) {
    const auto& lb = std::get<Literal>(b.node);
    return lit->kind == lb.kind && lit->text == lb.text;
  }
  if (const auto* p = std::get_if<NamePath>(&a.node)) {
    return equal_path(*p, std::get<NamePath>(b.node));
  }
  if (const auto* c = std::get_if<Call>(&a.node)) {
    return equal_call(*c, std::get<Call>(b.node));
  }
  if (const auto* bin = std::get_if<Binary>(&a.node)) {
    const auto& bb = std::get<Binary>(b.node);
    return bin->op == bb.op && equal_ptr(bin->lhs, bb.lhs) && equal_ptr(bin->rhs, bb.rhs);
  }
  const auto& ua = std::get<Unary>(a.node);
  const auto& ub = std::get<Unary>(b.node);
  return ua.op == ub.op && equal_ptr(ua.operand, ub.operand);
}

bool equal(const Stmt& a, const Stmt& b) {
  if (a.node.index() != b.node.index()) return false;
  if (const auto* as = std::get_if<AssignStmt>(&a.node)) {
    const auto& bs = std::get<AssignStmt>(b.node);
    return equal_path(as->target, bs.target) && equal_ptr(as->value, bs.value);
  }
  if (const auto* cs = std::get_if<CallStmt>(&a.node)) {
    return equal_call(cs->call, std::get<CallStmt>(b.node).call);
  }
  if (const auto* is = std::get_if<IfStmt>(&a.node)) {
    const auto& bs = std::get<IfStmt>(b.node);
    if (is->arms.size() != bs.arms.size()) return false;
    for (std::size_t i = 0; i < is->arms.size(); ++i) {
      if (!equal_ptr(is->arms[i].cond, bs.arms[i].cond)) return false;
      if (!equal_list(is->arms[i].body, bs.arms[i].body)) return false;
    }
    return equal_opt_list(is->else_body, bs.else_body);
  }
  if (const auto* cs = std::get_if<CaseStmt>(&a.node)) {
    const auto& bs = std::get<CaseStmt>(b.node);
    if (!equal_ptr(cs->selector, bs.selector)) return false;
    if (cs->arms.size() != bs.arms.size()) return false;
    for (std::size_t i = 0; i < cs->arms.size(); ++i) {
      if (cs->arms[i].labels.size() != bs.arms[i].labels.size()) return false;
      for (std::size_t j = 0; j < cs->arms[i].labels.size(); ++j) {
        if (!equal_label(cs->arms[i].labels[j], bs.arms[i].labels[j])) return false;
      }
      if (!equal_list(cs->arms[i].body, bs.arms[i].body)) return false;
    }
    return equal_opt_list(cs->else_body, bs.else_body);
  }
  if (const auto* fs = std::get_if<ForStmt>(&a.node)) {
    const auto& bs = std::get<ForStmt>(b.node);
    return fs->var == bs.var && equal_ptr(fs->from, bs.from) && equal_ptr(fs->to, bs.to) &&
           equal_ptr(fs->by, bs.by) && equal_list(fs->body, bs.body);
  }
  if (const auto* ws = std::get_if<WhileStmt>(&a.node)) {
    const auto& bs = std::get<WhileStmt>(b.node);
    return equal_ptr(ws->cond, bs.cond) && equal_list(ws->body, bs.body);
  }
  if (const auto* rs = std::get_if<RepeatStmt>(&a.node)) {
    const auto& bs = std::get<RepeatStmt>(b.node);
    return equal_list(rs->body, bs.body) && equal_ptr(rs->until, bs.until);
  }
  return true;  // ExitStmt / ReturnStmt carry no data
}

bool equal(const StAst& a, const StAst& b) { return equal_list(a.statements, b.statements); }

}  // namespace sfckit::st
