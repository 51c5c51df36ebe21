#include "sfckit/st/printer.hpp"

#include <sstream>

namespace sfckit::st {

namespace {

std::string_view op_text(BinOp op) {
  switch (op) {
    case BinOp::Or: return "OR";
    case BinOp::Xor: return "XOR";
    case BinOp::And: return "AND";
    case BinOp::Eq: return "=";
    case BinOp::Ne: return "<>";
    case BinOp::Lt: return "<";
    case BinOp::Gt: return ">";
    case BinOp::Le: return "<=";
    case BinOp::Ge: return ">=";
    case BinOp::Add: return "+";
    case BinOp::Sub: return "-";
    case BinOp::Mul: return "*";
    case BinOp::Div: return "/";
    case BinOp::Mod: return "MOD";
  }
  return "?";
}

struct Printer {
  std::ostringstream os;
  int depth = 0;

  void indent() {
    for (int i = 0; i < depth; ++i) os << "  ";
  }

  void write_path(const NamePath& p) {
    for (std::size_t i = 0; i < p.parts.size(); ++i) {
      if (i) os << '.';
      os << p.parts[i];
    }
  }

  void write_call(const Call& c) {
    write_path(c.callee);
    os << '(';
    for (std::size_t i = 0; i < c.args.size(); ++i) {
      if (i) os << ", ";
      const auto& a = c.args[i];
      if (a.name) os << *a.name << (a.is_output ? " => " : " := ");
      write_expr(*a.value);
    }
    os << ')';
  }

  void write_expr(const Expr& e) {
    if (const auto* lit = std::get_if<Literal>(&e.node)) {
      os << lit->text;
    } else if (const auto* p = std::get_if<NamePath>(&e.node)) {
      write_path(*p);
    } else if (const auto* c = std::get_if<Call>(&e.node)) {
      write_call(*c);
    } else if (const auto* b = std::get_if<Binary>(&e.node)) {
      os << '(';
      write_expr(*b->lhs);
      os << ' ' << op_text(b->op) << ' ';
      write_expr(*b->rhs);
      os << ')';
    } else {
      const auto& u = std::get<Unary>(e.node);
      os << '(';
      switch (u.op) {
        case UnOp::Not: os << "NOT "; break;
        case UnOp::Neg: os << '-'; break;
        case UnOp::Plus: os << '+'; break;
      }
      write_expr(*u.operand);
      os << ')';
    }
  }

  void write_label(const CaseLabel& l) {
    if (const auto* s = std::get_if<std::string>(&l.value)) {
      os << *s;
    } else if (const auto* r = std::get_if<CaseLabel::Range>(&l.value)) {
      os << r->lo << ".." << r->hi;
    } else {
      write_path(std::get<NamePath>(l.value));
    }
  }

  void write_body(const StmtList& body) {
    ++depth;
    for (const auto& s : body) write_stmt(*s);
    --depth;
  }

  void write_stmt(const Stmt& s) {
    indent();
    if (const auto* a = std::get_if<AssignStmt>(&s.node)) {
      write_path(a->target);
      os << " := ";
      write_expr(*a->value);
      os << ";\n";
    } else if (const auto* c = std::get_if<CallStmt>(&s.node)) {
      write_call(c->call);
      os << ";\n";
    } else if (const auto* f = std::get_if<IfStmt>(&s.node)) {
      for (std::size_t i = 0; i < f->arms.size(); ++i) {
        if (i) {
          indent();
          os << "ELSIF ";
        } else {
          os << "IF ";
        }
        write_expr(*f->arms[i].cond);
        os << " THEN\n";
        write_body(f->arms[i].body);
      }
      if (f->else_body) {
        indent();
        os << "ELSE\n";
        write_body(*f->else_body);
      }
      indent();
      os << "END_IF;\n";
    } else if (const auto* c = std::get_if<CaseStmt>(&s.node)) {
      os << "CASE ";
      write_expr(*c->selector);
      os << " OF\n";
      ++depth;
      for (const auto& arm : c->arms) {
        indent();
        for (std::size_t i = 0; i < arm.labels.size(); ++i) {
          if (i) os << ", ";
          write_label(arm.labels[i]);
        }
        os << ":\n";
        write_body(arm.body);
      }
      --depth;
      if (c->else_body) {
        indent();
        os << "ELSE\n";
        write_body(*c->else_body);
      }
      indent();
      os << "END_CASE;\n";
    } else if (const auto* f = std::get_if<ForStmt>(&s.node)) {
      os << "FOR " << f->var << " := ";
      write_expr(*f->from);
      os << " TO ";
      write_expr(*f->to);
      if (f->by) {
        os << " BY ";
        write_expr(*f->by);
      }
      os << " DO\n";
      write_body(f->body);
      indent();
      os << "END_FOR;\n";
    } else if (const auto* w = std::get_if<WhileStmt>(&s.node)) {
      os << "WHILE ";
      write_expr(*w->cond);
      os << " DO\n";
      write_body(w->body);
      indent();
      os << "END_WHILE;\n";
    } else if (const auto* r = std::get_if<RepeatStmt>(&s.node)) {
      os << "REPEAT\n";
      write_body(r->body);
      indent();
      os << "UNTIL ";
      write_expr(*r->until);
      os << "\n";
      indent();
      os << "END_REPEAT;\n";
    } else if (std::holds_alternative<ExitStmt>(s.node)) {
      os << "EXIT;\n";
    } else {
      os << "RETURN;\n";
    }
  }
};

}  // namespace

std::string print(const Expr& expr) {
  Printer p;
  p.write_expr(expr);
  return p.os.str();
}

std::string print(const StAst& ast) {
  Printer p;
  for (const auto& s : ast.statements) p.write_stmt(*s);
  return p.os.str();
}

}  // namespace sfckit::st
