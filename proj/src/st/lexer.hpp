#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sfckit/st/ast.hpp"

namespace sfckit::st {

enum class Tok {
  End,
  Ident,
  IntLit,
  RealLit,
  TimeLit,
  StringLit,
  TypedLit,   // TYPE#value spellings other than time/date
  // Keywords
  KwIf, KwThen, KwElsif, KwElse, KwEndIf,
  KwCase, KwOf, KwEndCase,
  KwFor, KwTo, KwBy, KwDo, KwEndFor,
  KwWhile, KwEndWhile,
  KwRepeat, KwUntil, KwEndRepeat,
  KwExit, KwReturn,
  KwAnd, KwOr, KwXor, KwNot, KwMod,
  KwTrue, KwFalse,
  // Punctuation
  Assign,      // :=
  OutArrow,    // =>
  Eq, Ne, Le, Ge, Lt, Gt,
  Plus, Minus, Star, Slash,
  LParen, RParen,
  Comma, Semi, Colon, Dot, DotDot,
  Error,
};

struct Token {
  Tok kind = Tok::End;
  Span span;
  std::string text;  // verbatim source slice (empty for End)
};

struct LexError {
  Span span;
  std::string message;
};

// Tokenizes the whole input. Comments ((*..*) nested, //-to-eol, /*..*/) and
// whitespace are skipped. On a bad character or unterminated construct the
// token stream ends with an Error token and `error` is set.
struct LexResult {
  std::vector<Token> tokens;  // always terminated by End or Error
  std::optional<LexError> error;
};

LexResult lex(std::string_view src);

std::string_view token_name(Tok t);

}  // namespace sfckit::st
