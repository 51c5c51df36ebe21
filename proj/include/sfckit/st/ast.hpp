#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace sfckit::st {

// Byte range [begin, end) into the source text.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;

  bool operator==(const Span&) const = default;
};

enum class BinOp { Or, Xor, And, Eq, Ne, Lt, Gt, Le, Ge, Add, Sub, Mul, Div, Mod };
enum class UnOp { Not, Neg, Plus };

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

struct Literal {
  enum class Kind { Bool, Int, Real, Time, String, Typed };
  Kind kind = Kind::Int;
  std::string text;  // verbatim source spelling
};

// Dotted member-access path: base.part.part
struct NamePath {
  std::vector<std::string> parts;
};

struct CallArg {
  std::optional<std::string> name;  // formal parameter for named arguments
  bool is_output = false;           // named output binding (=>)
  ExprPtr value;
};

struct Call {
  NamePath callee;
  std::vector<CallArg> args;
};

struct Binary {
  BinOp op;
  ExprPtr lhs;
  ExprPtr rhs;
};

struct Unary {
  UnOp op;
  ExprPtr operand;
};

struct Expr {
  Span span;
  std::variant<Literal, NamePath, Call, Binary, Unary> node;
};

struct Stmt;
using StmtPtr = std::unique_ptr<Stmt>;
using StmtList = std::vector<StmtPtr>;

struct AssignStmt {
  NamePath target;
  ExprPtr value;
};

struct CallStmt {
  Call call;
};

struct IfStmt {
  struct Arm {
    ExprPtr cond;
    StmtList body;
  };
  std::vector<Arm> arms;  // IF plus ELSIFs, in order
  std::optional<StmtList> else_body;
};

struct CaseLabel {
  // Integer value, integer range, or an enum-style name.
  struct Range {
    std::string lo;
    std::string hi;
  };
  std::variant<std::string, Range, NamePath> value;  // string holds integer literal text
};

struct CaseStmt {
  ExprPtr selector;
  struct Arm {
    std::vector<CaseLabel> labels;
    StmtList body;
  };
  std::vector<Arm> arms;
  std::optional<StmtList> else_body;
};

struct ForStmt {
  std::string var;
  ExprPtr from;
  ExprPtr to;
  ExprPtr by;  // may be null
  StmtList body;
};

struct WhileStmt {
  ExprPtr cond;
  StmtList body;
};

struct RepeatStmt {
  StmtList body;
  ExprPtr until;
};

struct ExitStmt {};
struct ReturnStmt {};

struct Stmt {
  Span span;
  std::variant<AssignStmt, CallStmt, IfStmt, CaseStmt, ForStmt, WhileStmt, RepeatStmt,
               ExitStmt, ReturnStmt>
      node;
};

struct StAst {
  StmtList statements;
};

// Structural equality, spans ignored. Used by the re-print/re-parse fixpoint.
bool equal(const Expr& a, const Expr& b);
bool equal(const Stmt& a, const Stmt& b);
bool equal(const StAst& a, const StAst& b);

}  // namespace sfckit::st
