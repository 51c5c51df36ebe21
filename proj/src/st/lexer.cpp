#include "lexer.hpp"

#include <cctype>
#include <unordered_map>

namespace sfckit::st {

namespace {

bool is_ident_start(unsigned char c) { return std::isalpha(c) || c == '_'; }
bool is_ident_char(unsigned char c) { return std::isalnum(c) || c == '_'; }
bool is_digit(unsigned char c) { return std::isdigit(c) != 0; }

const std::unordered_map<std::string, Tok>& keyword_map() {
  static const std::unordered_map<std::string, Tok> kw = {
      {"if", Tok::KwIf},         {"then", Tok::KwThen},
      {"elsif", Tok::KwElsif},   {"else", Tok::KwElse},
      {"end_if", Tok::KwEndIf},  {"case", Tok::KwCase},
      {"of", Tok::KwOf},         {"end_case", Tok::KwEndCase},
      {"for", Tok::KwFor},       {"to", Tok::KwTo},
      {"by", Tok::KwBy},         {"do", Tok::KwDo},
      {"end_for", Tok::KwEndFor},{"while", Tok::KwWhile},
      {"end_while", Tok::KwEndWhile},
      {"repeat", Tok::KwRepeat}, {"until", Tok::KwUntil},
      {"end_repeat", Tok::KwEndRepeat},
      {"exit", Tok::KwExit},     {"return", Tok::KwReturn},
      {"and", Tok::KwAnd},       {"or", Tok::KwOr},
      {"xor", Tok::KwXor},       {"not", Tok::KwNot},
      {"mod", Tok::KwMod},       {"true", Tok::KwTrue},
      {"false", Tok::KwFalse},
  };
  return kw;
}

std::string fold(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (unsigned char c : s) out.push_back(static_cast<char>(std::tolower(c)));
  return out;
}

// Prefixes that make TYPE#value a duration/date literal.
bool is_time_prefix(const std::string& folded) {
  return folded == "t" || folded == "time" || folded == "lt" || folded == "ltime" ||
         folded == "d" || folded == "date" || folded == "ld" || folded == "ldate" ||
         folded == "tod" || folded == "time_of_day" || folded == "dt" ||
         folded == "date_and_time" || folded == "ldt";
}

bool is_hash_value_char(unsigned char c) {
  return std::isalnum(c) || c == '_' || c == '.' || c == ':' || c == '-' || c == '+';
}

struct Lexer {
  std::string_view src;
  std::size_t i = 0;
  LexResult out;

  unsigned char peek(std::size_t off = 0) const {
    return i + off < src.size() ? static_cast<unsigned char>(src[i + off]) : 0;
  }
  bool at_end() const { return i >= src.size(); }

  void push(Tok kind, std::size_t begin) {
    out.tokens.push_back({kind, {begin, i}, std::string(src.substr(begin, i - begin))});
  }

  void fail(std::size_t begin, std::string message) {
    out.tokens.push_back({Tok::Error, {begin, i}, std::string(src.substr(begin, i - begin))});
    out.error = LexError{{begin, i}, std::move(message)};
  }

  // Returns false when an unterminated comment was diagnosed.
  bool skip_trivia() {
    for (;;) {
      while (!at_end() && std::isspace(peek())) ++i;
      if (peek() == '/' && peek(1) == '/') {
        while (!at_end() && peek() != '\n') ++i;
        continue;
      }
      if (peek() == '(' && peek(1) == '*') {
        std::size_t begin = i;
        i += 2;
        int depth = 1;
        while (!at_end() && depth > 0) {
          if (peek() == '(' && peek(1) == '*') { depth++; i += 2; }
          else if (peek() == '*' && peek(1) == ')') { depth--; i += 2; }
          else ++i;
        }
        if (depth > 0) {
          fail(begin, "unterminated comment");
          return false;
        }
        continue;
      }
      if (peek() == '/' && peek(1) == '*') {
        std::size_t begin = i;
        i += 2;
        while (!at_end() && !(peek() == '*' && peek(1) == '/')) ++i;
        if (at_end()) {
          fail(begin, "unterminated comment");
          return false;
        }
        i += 2;
        continue;
      }
      return true;
    }
  }

  void lex_number(std::size_t begin) {
    while (is_digit(peek()) || peek() == '_') ++i;
    if (peek() == '#') {
      // Based literal: 16#FF, 2#1010_1010
      ++i;
      if (!is_hash_value_char(peek())) {
        fail(begin, "expected digits after '#'");
        return;
      }
      while (is_hash_value_char(peek())) ++i;
      push(Tok::IntLit, begin);
      return;
    }
    bool is_real = false;
    if (peek() == '.' && is_digit(peek(1))) {  // not '..'
      is_real = true;
      ++i;
      while (is_digit(peek()) || peek() == '_') ++i;
    }
    if (peek() == 'e' || peek() == 'E') {
      std::size_t save = i;
      ++i;
      if (peek() == '+' || peek() == '-') ++i;
      if (is_digit(peek())) {
        is_real = true;
        while (is_digit(peek())) ++i;
      } else {
        i = save;  // 'e' belongs to a following identifier
      }
    }
    push(is_real ? Tok::RealLit : Tok::IntLit, begin);
  }

  void lex_ident_or_hash(std::size_t begin) {
    while (is_ident_char(peek())) ++i;
    std::string word = fold(src.substr(begin, i - begin));
    if (peek() == '#') {
      ++i;
      if (!is_hash_value_char(peek())) {
        fail(begin, "expected literal value after '#'");
        return;
      }
      while (is_hash_value_char(peek())) ++i;
      push(is_time_prefix(word) ? Tok::TimeLit : Tok::TypedLit, begin);
      return;
    }
    auto it = keyword_map().find(word);
    push(it != keyword_map().end() ? it->second : Tok::Ident, begin);
  }

  void lex_string(std::size_t begin) {
    ++i;  // opening '
    while (!at_end()) {
      unsigned char c = peek();
      if (c == '$') {
        i += 2;  // $-escape consumes the next character
        continue;
      }
      if (c == '\'') {
        ++i;
        push(Tok::StringLit, begin);
        return;
      }
      if (c == '\n') break;
      ++i;
    }
    fail(begin, "unterminated string literal");
  }

  void run() {
    while (true) {
      if (!skip_trivia()) return;
      if (at_end()) {
        out.tokens.push_back({Tok::End, {i, i}, ""});
        return;
      }
      std::size_t begin = i;
      unsigned char c = peek();
      if (is_digit(c)) { lex_number(begin); }
      else if (is_ident_start(c)) { lex_ident_or_hash(begin); }
      else if (c == '\'') { lex_string(begin); }
      else if (c == ':' && peek(1) == '=') { i += 2; push(Tok::Assign, begin); }
      else if (c == '=' && peek(1) == '>') { i += 2; push(Tok::OutArrow, begin); }
      else if (c == '<' && peek(1) == '>') { i += 2; push(Tok::Ne, begin); }
      else if (c == '<' && peek(1) == '=') { i += 2; push(Tok::Le, begin); }
      else if (c == '>' && peek(1) == '=') { i += 2; push(Tok::Ge, begin); }
      else if (c == '.' && peek(1) == '.') { i += 2; push(Tok::DotDot, begin); }
      else switch (c) {
        case '=': ++i; push(Tok::Eq, begin); break;
        case '<': ++i; push(Tok::Lt, begin); break;
        case '>': ++i; push(Tok::Gt, begin); break;
        case '+': ++i; push(Tok::Plus, begin); break;
        case '-': ++i; push(Tok::Minus, begin); break;
        case '*': ++i; push(Tok::Star, begin); break;
        case '/': ++i; push(Tok::Slash, begin); break;
        case '(': ++i; push(Tok::LParen, begin); break;
        case ')': ++i; push(Tok::RParen, begin); break;
        case ',': ++i; push(Tok::Comma, begin); break;
        case ';': ++i; push(Tok::Semi, begin); break;
        case ':': ++i; push(Tok::Colon, begin); break;
        case '.': ++i; push(Tok::Dot, begin); break;
        case '&': ++i; push(Tok::KwAnd, begin); break;
        default:
          ++i;
          fail(begin, "unexpected character");
          return;
      }
      if (out.error) return;
    }
  }
};

}  // namespace

LexResult lex(std::string_view src) {
  Lexer lx{src};
  lx.run();
  return std::move(lx.out);
}

std::string_view token_name(Tok t) {
  switch (t) {
    case Tok::End: return "end of input";
    case Tok::Ident: return "identifier";
    case Tok::IntLit: return "integer literal";
    case Tok::RealLit: return "real literal";
    case Tok::TimeLit: return "time literal";
    case Tok::StringLit: return "string literal";
    case Tok::TypedLit: return "typed literal";
    case Tok::KwIf: return "IF";
    case Tok::KwThen: return "THEN";
    case Tok::KwElsif: return "ELSIF";
    case Tok::KwElse: return "ELSE";
    case Tok::KwEndIf: return "END_IF";
    case Tok::KwCase: return "CASE";
    case Tok::KwOf: return "OF";
    case Tok::KwEndCase: return "END_CASE";
    case Tok::KwFor: return "FOR";
    case Tok::KwTo: return "TO";
    case Tok::KwBy: return "BY";
    case Tok::KwDo: return "DO";
    case Tok::KwEndFor: return "END_FOR";
    case Tok::KwWhile: return "WHILE";
    case Tok::KwEndWhile: return "END_WHILE";
    case Tok::KwRepeat: return "REPEAT";
    case Tok::KwUntil: return "UNTIL";
    case Tok::KwEndRepeat: return "END_REPEAT";
    case Tok::KwExit: return "EXIT";
    case Tok::KwReturn: return "RETURN";
    case Tok::KwAnd: return "AND";
    case Tok::KwOr: return "OR";
    case Tok::KwXor: return "XOR";
    case Tok::KwNot: return "NOT";
    case Tok::KwMod: return "MOD";
    case Tok::KwTrue: return "TRUE";
    case Tok::KwFalse: return "FALSE";
    case Tok::Assign: return ":=";
    case Tok::OutArrow: return "=>";
    case Tok::Eq: return "=";
    case Tok::Ne: return "<>";
    case Tok::Le: return "<=";
    case Tok::Ge: return ">=";
    case Tok::Lt: return "<";
    case Tok::Gt: return ">";
    case Tok::Plus: return "+";
    case Tok::Minus: return "-";
    case Tok::Star: return "*";
    case Tok::Slash: return "/";
    case Tok::LParen: return "(";
    case Tok::RParen: return ")";
    case Tok::Comma: return ",";
    case Tok::Semi: return ";";
    case Tok::Colon: return ":";
    case Tok::Dot: return ".";
    case Tok::DotDot: return "..";
    case Tok::Error: return "invalid token";
  }
  return "?";
}

}  // namespace sfckit::st
