#include "json_reader.hpp"

#include <cctype>

namespace sfckit::reduced::json {

namespace {

struct Fail {};

struct Reader {
  std::string_view src;
  std::size_t i = 0;
  Document doc;

  Value* alloc() {
    doc.arena.push_back(std::make_unique<Value>());
    return doc.arena.back().get();
  }

  bool at_end() const { return i >= src.size(); }
  unsigned char peek() const { return at_end() ? 0 : static_cast<unsigned char>(src[i]); }

  [[noreturn]] void fail(std::vector<std::string> expected, std::string message = {}) {
    SyntaxError e;
    e.position = i;
    e.found = at_end() ? "end of input" : std::string(1, src[i]);
    e.expected = std::move(expected);
    if (message.empty()) {
      message = "expected ";
      for (std::size_t k = 0; k < e.expected.size(); ++k) {
        if (k) message += " or ";
        message += e.expected[k];
      }
      message += at_end() ? ", found end of input" : ", found '" + e.found + "'";
    }
    e.message = std::move(message);
    doc.error = std::move(e);
    throw Fail{};
  }

  void skip_ws() {
    while (!at_end()) {
      unsigned char c = peek();
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r') ++i;
      else break;
    }
  }

  void expect(char c, const char* what) {
    if (peek() != static_cast<unsigned char>(c)) fail({what});
    ++i;
  }

  void match_word(std::string_view word) {
    if (src.substr(i).substr(0, word.size()) != word) fail({std::string(word)});
    i += word.size();
  }

  int hex_digit() {
    unsigned char c = peek();
    if (c >= '0' && c <= '9') { ++i; return c - '0'; }
    if (c >= 'a' && c <= 'f') { ++i; return c - 'a' + 10; }
    if (c >= 'A' && c <= 'F') { ++i; return c - 'A' + 10; }
    fail({"hex digit"});
  }

  void append_utf8(std::string& out, unsigned cp) {
    if (cp < 0x80) {
      out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
      out.push_back(static_cast<char>(0xc0 | (cp >> 6)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3f)));
    } else {
      out.push_back(static_cast<char>(0xe0 | (cp >> 12)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3f)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3f)));
    }
  }

  std::string parse_string_body() {
    expect('"', "string");
    std::string out;
    for (;;) {
      if (at_end()) fail({"'\"'"}, "unterminated string");
      unsigned char c = static_cast<unsigned char>(src[i]);
      if (c == '"') { ++i; return out; }
      if (c < 0x20) fail({"escaped control character"});
      if (c == '\\') {
        ++i;
        if (at_end()) fail({"escape character"});
        char e = src[i];
        switch (e) {
          case '"': out.push_back('"'); ++i; break;
          case '\\': out.push_back('\\'); ++i; break;
          case '/': out.push_back('/'); ++i; break;
          case 'b': out.push_back('\b'); ++i; break;
          case 'f': out.push_back('\f'); ++i; break;
          case 'n': out.push_back('\n'); ++i; break;
          case 'r': out.push_back('\r'); ++i; break;
          case 't': out.push_back('\t'); ++i; break;
          case 'u': {
            ++i;
            unsigned cp = 0;
            for (int k = 0; k < 4; ++k) cp = cp * 16 + static_cast<unsigned>(hex_digit());
            append_utf8(out, cp);
            break;
          }
          default:
            fail({"valid escape"});
        }
        continue;
      }
      out.push_back(static_cast<char>(c));
      ++i;
    }
  }

  Value* parse_value() {
    skip_ws();
    if (at_end()) fail({"value"});
    Value* v = alloc();
    v->pos = i;
    switch (peek()) {
      case '{': {
        v->kind = Value::Kind::Object;
        ++i;
        skip_ws();
        if (peek() == '}') { ++i; return v; }
        for (;;) {
          skip_ws();
          Member m;
          m.key_pos = i;
          m.key = parse_string_body();
          skip_ws();
          expect(':', "':'");
          m.value = parse_value();
          v->members.push_back(std::move(m));
          skip_ws();
          if (peek() == ',') { ++i; continue; }
          expect('}', "'}' or ','");
          return v;
        }
      }
      case '[': {
        v->kind = Value::Kind::Array;
        ++i;
        skip_ws();
        if (peek() == ']') { ++i; return v; }
        for (;;) {
          v->items.push_back(parse_value());
          skip_ws();
          if (peek() == ',') { ++i; continue; }
          expect(']', "']' or ','");
          return v;
        }
      }
      case '"':
        v->kind = Value::Kind::String;
        v->string = parse_string_body();
        return v;
      case 't':
        match_word("true");
        v->kind = Value::Kind::Bool;
        v->boolean = true;
        return v;
      case 'f':
        match_word("false");
        v->kind = Value::Kind::Bool;
        v->boolean = false;
        return v;
      case 'n':
        match_word("null");
        v->kind = Value::Kind::Null;
        return v;
      default: {
        unsigned char c = peek();
        if (c == '-' || std::isdigit(c)) {
          v->kind = Value::Kind::Number;
          std::size_t begin = i;
          if (peek() == '-') ++i;
          if (!std::isdigit(peek())) fail({"digit"});
          while (std::isdigit(peek())) ++i;
          if (peek() == '.') {
            ++i;
            if (!std::isdigit(peek())) fail({"digit"});
            while (std::isdigit(peek())) ++i;
          }
          if (peek() == 'e' || peek() == 'E') {
            ++i;
            if (peek() == '+' || peek() == '-') ++i;
            if (!std::isdigit(peek())) fail({"digit"});
            while (std::isdigit(peek())) ++i;
          }
          v->string = std::string(src.substr(begin, i - begin));
          return v;
        }
        fail({"value"});
      }
    }
  }
};

}  // namespace

Document parse(std::string_view text) {
  Reader r{text};
  try {
    Value* root = r.parse_value();
    r.skip_ws();
    if (!r.at_end()) r.fail({"end of input"}, "trailing content after document");
    r.doc.root = root;
  } catch (const Fail&) {
    r.doc.root = nullptr;
  }
  return std::move(r.doc);
}

}  // namespace sfckit::reduced::json
