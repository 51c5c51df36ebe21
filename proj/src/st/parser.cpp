#include "sfckit/st/parser.hpp"

#include <algorithm>

#include "lexer.hpp"

namespace sfckit::st {

namespace {

struct ParserFail {};  // unwinds to the entry point; details live in Parser::error

struct Parser {
  const std::vector<Token>& toks;
  std::size_t pos = 0;
  ParseError error;

  const Token& cur() const { return toks[pos]; }

  bool at(Tok k) const { return cur().kind == k; }

  const Token& advance() { return toks[pos++]; }

  [[noreturn]] void fail(std::vector<std::string> expected, std::string message = {}) {
    error.span = cur().span;
    error.found = cur().kind == Tok::End ? "end of input" : cur().text;
    std::sort(expected.begin(), expected.end());
    expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
    error.expected = std::move(expected);
    if (message.empty()) {
      std::string m = "expected ";
      for (std::size_t i = 0; i < error.expected.size(); ++i) {
        if (i) m += error.expected.size() == 2 ? " or " : ", ";
        m += error.expected[i];
      }
      m += ", found ";
      m += error.found.empty() ? std::string("end of input") : "'" + error.found + "'";
      error.message = std::move(m);
    } else {
      error.message = std::move(message);
    }
    throw ParserFail{};
  }

  const Token& expect(Tok k) {
    if (!at(k)) fail({std::string(token_name(k))});
    return advance();
  }

  void check_lex_error() {
    if (at(Tok::Error)) fail({"valid token"});
  }

  // ---- expressions ----------------------------------------------------

  ExprPtr make_binary(BinOp op, ExprPtr lhs, ExprPtr rhs) {
    Span span{lhs->span.begin, rhs->span.end};
    auto e = std::make_unique<Expr>();
    e->span = span;
    e->node = Binary{op, std::move(lhs), std::move(rhs)};
    return e;
  }

  ExprPtr parse_expr() { return parse_or(); }

  ExprPtr parse_or() {
    auto lhs = parse_xor();
    while (at(Tok::KwOr)) {
      advance();
      lhs = make_binary(BinOp::Or, std::move(lhs), parse_xor());
    }
    return lhs;
  }

  ExprPtr parse_xor() {
    auto lhs = parse_and();
    while (at(Tok::KwXor)) {
      advance();
      lhs = make_binary(BinOp::Xor, std::move(lhs), parse_and());
    }
    return lhs;
  }

  ExprPtr parse_and() {
    auto lhs = parse_cmp();
    while (at(Tok::KwAnd)) {
      advance();
      lhs = make_binary(BinOp::And, std::move(lhs), parse_cmp());
    }
    return lhs;
  }

  ExprPtr parse_cmp() {
    auto lhs = parse_add();
    for (;;) {
      BinOp op;
      switch (cur().kind) {
        case Tok::Eq: op = BinOp::Eq; break;
        case Tok::Ne: op = BinOp::Ne; break;
        case Tok::Lt: op = BinOp::Lt; break;
        case Tok::Gt: op = BinOp::Gt; break;
        case Tok::Le: op = BinOp::Le; break;
        case Tok::Ge: op = BinOp::Ge; break;
        default: return lhs;
      }
      advance();
      lhs = make_binary(op, std::move(lhs), parse_add());
    }
  }

  ExprPtr parse_add() {
    auto lhs = parse_mul();
    for (;;) {
      if (at(Tok::Plus)) {
        advance();
        lhs = make_binary(BinOp::Add, std::move(lhs), parse_mul());
      } else if (at(Tok::Minus)) {
        advance();
        lhs = make_binary(BinOp::Sub, std::move(lhs), parse_mul());
      } else {
        return lhs;
      }
    }
  }

  ExprPtr parse_mul() {
    auto lhs = parse_unary();
    for (;;) {
      BinOp op;
      if (at(Tok::Star)) op = BinOp::Mul;
      else if (at(Tok::Slash)) op = BinOp::Div;
      else if (at(Tok::KwMod)) op = BinOp::Mod;
      else return lhs;
      advance();
      lhs = make_binary(op, std::move(lhs), parse_unary());
    }
  }

  ExprPtr parse_unary() {
    UnOp op;
    if (at(Tok::KwNot)) op = UnOp::Not;
    else if (at(Tok::Minus)) op = UnOp::Neg;
    else if (at(Tok::Plus)) op = UnOp::Plus;
    else return parse_primary();
    Span begin = cur().span;
    advance();
    auto operand = parse_unary();
    auto e = std::make_unique<Expr>();
    e->span = {begin.begin, operand->span.end};
    e->node = Unary{op, std::move(operand)};
    return e;
  }

  ExprPtr make_literal(Literal::Kind kind) {
    const Token& t = advance();
    auto e = std::make_unique<Expr>();
    e->span = t.span;
    e->node = Literal{kind, t.text};
    return e;
  }

  NamePath parse_name_path() {
    NamePath path;
    path.parts.push_back(expect(Tok::Ident).text);
    while (at(Tok::Dot)) {
      advance();
      path.parts.push_back(expect(Tok::Ident).text);
    }
    return path;
  }

  std::vector<CallArg> parse_call_args() {
    std::vector<CallArg> args;
    expect(Tok::LParen);
    if (at(Tok::RParen)) {
      advance();
      return args;
    }
    for (;;) {
      check_lex_error();
      CallArg arg;
      if (at(Tok::Ident) &&
          (toks[pos + 1].kind == Tok::Assign || toks[pos + 1].kind == Tok::OutArrow)) {
        arg.name = advance().text;
        arg.is_output = advance().kind == Tok::OutArrow;
      }
      arg.value = parse_expr();
      args.push_back(std::move(arg));
      if (at(Tok::Comma)) {
        advance();
        continue;
      }
      expect(Tok::RParen);
      return args;
    }
  }

  ExprPtr parse_primary() {
    check_lex_error();
    switch (cur().kind) {
      case Tok::KwTrue:
      case Tok::KwFalse:
        return make_literal(Literal::Kind::Bool);
      case Tok::IntLit:
        return make_literal(Literal::Kind::Int);
      case Tok::RealLit:
        return make_literal(Literal::Kind::Real);
      case Tok::TimeLit:
        return make_literal(Literal::Kind::Time);
      case Tok::StringLit:
        return make_literal(Literal::Kind::String);
      case Tok::TypedLit:
        return make_literal(Literal::Kind::Typed);
      case Tok::LParen: {
        advance();
        auto inner = parse_expr();
        expect(Tok::RParen);
        return inner;
      }
      case Tok::Ident: {
        Span begin = cur().span;
        NamePath path = parse_name_path();
        auto e = std::make_unique<Expr>();
        if (at(Tok::LParen)) {
          Call call{std::move(path), parse_call_args()};
          e->span = {begin.begin, toks[pos - 1].span.end};
          e->node = std::move(call);
        } else {
          e->span = {begin.begin, toks[pos - 1].span.end};
          e->node = std::move(path);
        }
        return e;
      }
      default:
        fail({"expression"});
    }
  }

  // ---- statements ------------------------------------------------------

  bool at_statement_terminator() const {
    switch (cur().kind) {
      case Tok::End:
      case Tok::KwEndIf:
      case Tok::KwElsif:
      case Tok::KwElse:
      case Tok::KwEndCase:
      case Tok::KwEndFor:
      case Tok::KwEndWhile:
      case Tok::KwEndRepeat:
      case Tok::KwUntil:
        return true;
      default:
        return false;
    }
  }

  // Case arms additionally end at `label :`; detecting that needs lookahead.
  bool at_case_label_start() const {
    if (at(Tok::IntLit) || at(Tok::Minus)) return true;
    if (at(Tok::Ident)) {
      // An identifier only starts a label when followed by ':', ',' or '..'
      // (never ':=' which lexes as one token).
      std::size_t j = pos + 1;
      while (toks[j].kind == Tok::Dot && toks[j + 1].kind == Tok::Ident) j += 2;
      return toks[j].kind == Tok::Colon || toks[j].kind == Tok::Comma ||
             toks[j].kind == Tok::DotDot;
    }
    return false;
  }

  StmtList parse_stmt_list(bool in_case_arm = false) {
    StmtList list;
    for (;;) {
      check_lex_error();
      while (at(Tok::Semi)) advance();  // empty statements
      if (at_statement_terminator()) return list;
      if (in_case_arm && at_case_label_start()) return list;
      list.push_back(parse_stmt());
    }
  }

  StmtPtr finish_stmt(Span begin, auto node) {
    auto s = std::make_unique<Stmt>();
    s->span = {begin.begin, toks[pos - 1].span.end};
    s->node = std::move(node);
    return s;
  }

  StmtPtr parse_stmt() {
    check_lex_error();
    Span begin = cur().span;
    switch (cur().kind) {
      case Tok::KwIf: return parse_if(begin);
      case Tok::KwCase: return parse_case(begin);
      case Tok::KwFor: return parse_for(begin);
      case Tok::KwWhile: return parse_while(begin);
      case Tok::KwRepeat: return parse_repeat(begin);
      case Tok::KwExit:
        advance();
        expect(Tok::Semi);
        return finish_stmt(begin, ExitStmt{});
      case Tok::KwReturn:
        advance();
        expect(Tok::Semi);
        return finish_stmt(begin, ReturnStmt{});
      case Tok::Ident: {
        NamePath path = parse_name_path();
        if (at(Tok::LParen)) {
          Call call{std::move(path), parse_call_args()};
          expect(Tok::Semi);
          return finish_stmt(begin, CallStmt{std::move(call)});
        }
        expect(Tok::Assign);
        auto value = parse_expr();
        expect(Tok::Semi);
        return finish_stmt(begin, AssignStmt{std::move(path), std::move(value)});
      }
      default:
        fail({"statement"});
    }
  }

  StmtPtr parse_if(Span begin) {
    expect(Tok::KwIf);
    IfStmt node;
    for (;;) {
      IfStmt::Arm arm;
      arm.cond = parse_expr();
      expect(Tok::KwThen);
      arm.body = parse_stmt_list();
      node.arms.push_back(std::move(arm));
      if (at(Tok::KwElsif)) {
        advance();
        continue;
      }
      break;
    }
    if (at(Tok::KwElse)) {
      advance();
      node.else_body = parse_stmt_list();
    }
    expect(Tok::KwEndIf);
    if (at(Tok::Semi)) advance();
    return finish_stmt(begin, std::move(node));
  }

  CaseLabel parse_case_label() {
    CaseLabel label;
    if (at(Tok::IntLit) || at(Tok::Minus)) {
      std::string text;
      if (at(Tok::Minus)) {
        advance();
        text = "-";
      }
      text += expect(Tok::IntLit).text;
      if (at(Tok::DotDot)) {
        advance();
        std::string hi;
        if (at(Tok::Minus)) {
          advance();
          hi = "-";
        }
        hi += expect(Tok::IntLit).text;
        label.value = CaseLabel::Range{std::move(text), std::move(hi)};
      } else {
        label.value = std::move(text);
      }
    } else if (at(Tok::Ident)) {
      label.value = parse_name_path();
    } else {
      fail({"integer literal", "identifier"});
    }
    return label;
  }

  StmtPtr parse_case(Span begin) {
    expect(Tok::KwCase);
    CaseStmt node;
    node.selector = parse_expr();
    expect(Tok::KwOf);
    while (!at(Tok::KwEndCase) && !at(Tok::KwElse)) {
      check_lex_error();
      if (at(Tok::End)) fail({"case label", "ELSE", "END_CASE"});
      CaseStmt::Arm arm;
      arm.labels.push_back(parse_case_label());
      while (at(Tok::Comma)) {
        advance();
        arm.labels.push_back(parse_case_label());
      }
      expect(Tok::Colon);
      arm.body = parse_stmt_list(/*in_case_arm=*/true);
      node.arms.push_back(std::move(arm));
    }
    if (at(Tok::KwElse)) {
      advance();
      node.else_body = parse_stmt_list();
    }
    expect(Tok::KwEndCase);
    if (at(Tok::Semi)) advance();
    return finish_stmt(begin, std::move(node));
  }

  StmtPtr parse_for(Span begin) {
    expect(Tok::KwFor);
    ForStmt node;
    node.var = expect(Tok::Ident).text;
    expect(Tok::Assign);
    node.from = parse_expr();
    expect(Tok::KwTo);
    node.to = parse_expr();
    if (at(Tok::KwBy)) {
      advance();
      node.by = parse_expr();
    }
    expect(Tok::KwDo);
    node.body = parse_stmt_list();
    expect(Tok::KwEndFor);
    if (at(Tok::Semi)) advance();
    return finish_stmt(begin, std::move(node));
  }

  StmtPtr parse_while(Span begin) {
    expect(Tok::KwWhile);
    WhileStmt node;
    node.cond = parse_expr();
    expect(Tok::KwDo);
    node.body = parse_stmt_list();
    expect(Tok::KwEndWhile);
    if (at(Tok::Semi)) advance();
    return finish_stmt(begin, std::move(node));
  }

  StmtPtr parse_repeat(Span begin) {
    expect(Tok::KwRepeat);
    RepeatStmt node;
    node.body = parse_stmt_list();
    expect(Tok::KwUntil);
    node.until = parse_expr();
    expect(Tok::KwEndRepeat);
    if (at(Tok::Semi)) advance();
    return finish_stmt(begin, std::move(node));
  }
};

ParseError from_lex_error(const LexError& e) {
  return ParseError{e.span, "", {"valid token"}, e.message};
}

}  // namespace

StatementsResult parse_statements(std::string_view src) {
  LexResult lx = lex(src);
  Parser p{lx.tokens};
  StatementsResult result;
  try {
    StAst ast;
    ast.statements = p.parse_stmt_list();
    if (!p.at(Tok::End)) p.fail({"statement"});
    result.ast = std::move(ast);
  } catch (const ParserFail&) {
    if (lx.error && p.at(Tok::Error)) {
      result.error = from_lex_error(*lx.error);
    } else {
      result.error = std::move(p.error);
    }
  }
  return result;
}

ExpressionResult parse_expression(std::string_view src) {
  LexResult lx = lex(src);
  Parser p{lx.tokens};
  ExpressionResult result;
  try {
    auto expr = p.parse_expr();
    if (!p.at(Tok::End)) p.fail({"end of input", "operator"});
    result.expr = std::move(expr);
  } catch (const ParserFail&) {
    if (lx.error && p.at(Tok::Error)) {
      result.error = from_lex_error(*lx.error);
    } else {
      result.error = std::move(p.error);
    }
  }
  return result;
}

}  // namespace sfckit::st
