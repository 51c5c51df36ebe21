#include "sfckit/reduced/recognizer.hpp"

#include <cctype>
#include <string>
#include <vector>

#include "format.hpp"

namespace sfckit::reduced {

namespace {

enum class OpKind : std::uint8_t { Lit, Str, Bool, ArrOpen, ArrSep, Accept };

struct Op {
  OpKind kind = OpKind::Lit;
  std::string text;        // Lit bytes; ArrOpen: "\n" + element indent
  bool ident = false;      // Str: identifier charset, no escapes
  bool allow_null = false; // Str: 'null' alternative
  std::uint32_t min_chars = 0;
  bool allow_empty = true; // ArrOpen: '[]' permitted
  std::uint32_t target = 0;  // ArrOpen: op after the array; ArrSep: element start
  std::string sep_text;    // ArrSep: "\n" + element indent (after ',')
  std::string close_text;  // ArrSep: "\n" + close indent + "]"
};

// String-op sub-states held in RecognizerState::mode.
enum : std::uint8_t {
  kStrStart = 0,
  kStrBody = 1,
  kStrEscape = 2,
  kStrHex = 3,
  kStrNull = 4,
  kIdentFirst = 5,
  kIdentChar = 6,
  kIdentUnderscore = 7,
};

struct ProgramBuilder {
  std::vector<Op> ops;

  std::uint32_t add(Op op) {
    ops.push_back(std::move(op));
    return static_cast<std::uint32_t>(ops.size() - 1);
  }

  void lit(std::string_view text) {
    Op op;
    op.kind = OpKind::Lit;
    op.text = text;
    add(std::move(op));
  }

  void ident_string() {
    Op op;
    op.kind = OpKind::Str;
    op.ident = true;
    op.min_chars = 1;
    add(std::move(op));
  }

  void free_string(std::uint32_t min_chars, bool allow_null) {
    Op op;
    op.kind = OpKind::Str;
    op.min_chars = min_chars;
    op.allow_null = allow_null;
    add(std::move(op));
  }

  void boolean() { add(Op{OpKind::Bool}); }

  // Emits '[' + branch, the element body from `body`, and the separator op.
  void array(bool allow_empty, std::string_view elem_indent,
             std::string_view close_indent, auto&& body) {
    Op open;
    open.kind = OpKind::ArrOpen;
    open.allow_empty = allow_empty;
    open.text = "\n" + std::string(elem_indent);
    std::uint32_t open_idx = add(std::move(open));
    std::uint32_t elem_start = static_cast<std::uint32_t>(ops.size());
    body();
    Op sep;
    sep.kind = OpKind::ArrSep;
    sep.sep_text = "\n" + std::string(elem_indent);
    sep.close_text = "\n" + std::string(close_indent) + "]";
    sep.target = elem_start;
    add(std::move(sep));
    ops[open_idx].target = static_cast<std::uint32_t>(ops.size());
  }
};

std::vector<Op> build_program() {
  ProgramBuilder b;
  auto variable_array = [&] {
    b.array(/*allow_empty=*/true, fmt::kVarElemIndent, fmt::kVarCloseIndent, [&] {
      b.lit(fmt::kVarOpen);
      b.ident_string();
      b.lit(fmt::kVarAfterName);
      b.free_string(1, false);
      b.lit(fmt::kVarAfterType);
      b.free_string(0, true);
      b.lit(fmt::kVarClose);
    });
  };

  b.lit(fmt::kDocOpen);
  b.ident_string();
  b.lit(fmt::kAfterPou);
  variable_array();
  b.lit(fmt::kAfterInput);
  variable_array();
  b.lit(fmt::kAfterOutput);
  variable_array();
  b.lit(fmt::kAfterLocal);
  b.array(/*allow_empty=*/false, fmt::kStepElemIndent, fmt::kStepCloseIndent, [&] {
    b.lit(fmt::kStepOpen);
    b.ident_string();
    b.lit(fmt::kStepAfterName);
    b.boolean();
    b.lit(fmt::kStepAfterInitial);
    b.free_string(0, true);
    b.lit(fmt::kStepAfterAction);
    b.free_string(0, true);
    b.lit(fmt::kStepAfterComment);
    b.array(/*allow_empty=*/true, fmt::kChildElemIndent, fmt::kChildCloseIndent, [&] {
      b.lit(fmt::kChildOpen);
      b.ident_string();
      b.lit(fmt::kChildAfterTarget);
      b.free_string(1, false);
      b.lit(fmt::kChildAfterGuard);
      b.boolean();
      b.lit(fmt::kChildClose);
    });
    b.lit(fmt::kStepClose);
  });
  b.lit(fmt::kDocClose);
  b.add(Op{OpKind::Accept});
  return b.ops;
}

const std::vector<Op>& program() {
  static const std::vector<Op> prog = build_program();
  return prog;
}

struct Machine {
  RecognizerState s;

  void enter(std::uint32_t pc) {
    s.pc = pc;
    s.offset = 0;
    s.mode = 0;
    s.aux = 0;
    if (program()[pc].kind == OpKind::Accept) s.complete = true;
  }

  void next_op() { enter(s.pc + 1); }

  void reject() {
    s.rejected = true;
    s.reject_pos = s.consumed;
  }

  static bool is_letter(unsigned char c) { return std::isalpha(c) != 0; }
  static bool is_alnum(unsigned char c) { return std::isalnum(c) != 0; }
  static bool is_hex(unsigned char c) { return std::isxdigit(c) != 0; }

  void step_str(const Op& op, unsigned char c) {
    switch (s.mode) {
      case kStrStart:
        if (c == '"') {
          s.mode = op.ident ? kIdentFirst : kStrBody;
        } else if (op.allow_null && c == 'n') {
          s.mode = kStrNull;
          s.offset = 1;  // matched "null"[0]
        } else {
          reject();
        }
        return;
      case kStrNull: {
        static constexpr std::string_view kNull = "null";
        if (s.offset < kNull.size() && c == kNull[s.offset]) {
          if (++s.offset == kNull.size()) next_op();
        } else {
          reject();
        }
        return;
      }
      case kStrBody:
        if (c == '"') {
          if (s.aux >= op.min_chars) next_op();
          else reject();
        } else if (c == '\\') {
          s.mode = kStrEscape;
        } else if (c < 0x20) {
          reject();
        } else {
          s.aux = 1;
        }
        return;
      case kStrEscape:
        switch (c) {
          case '"': case '\\': case 'b': case 'f': case 'n': case 'r': case 't':
            s.mode = kStrBody;
            s.aux = 1;
            return;
          case 'u':
            s.mode = kStrHex;
            s.offset = 4;
            return;
          default:
            reject();
            return;
        }
      case kStrHex:
        if (is_hex(c)) {
          if (--s.offset == 0) {
            s.mode = kStrBody;
            s.aux = 1;
          }
        } else {
          reject();
        }
        return;
      case kIdentFirst:
        if (is_letter(c)) s.mode = kIdentChar;
        else if (c == '_') s.mode = kIdentUnderscore;
        else reject();
        return;
      case kIdentChar:
        if (c == '"') next_op();
        else if (is_alnum(c)) s.mode = kIdentChar;
        else if (c == '_') s.mode = kIdentUnderscore;
        else reject();
        return;
      case kIdentUnderscore:
        // A double or trailing underscore never appears in an identifier.
        if (is_alnum(c)) s.mode = kIdentChar;
        else reject();
        return;
      default:
        reject();
        return;
    }
  }

  void step_bool(unsigned char c) {
    static constexpr std::string_view kTrue = "true";
    static constexpr std::string_view kFalse = "false";
    if (s.mode == 0) {
      if (c == 't') s.mode = 1;
      else if (c == 'f') s.mode = 2;
      else { reject(); return; }
      s.offset = 1;
      return;
    }
    std::string_view word = s.mode == 1 ? kTrue : kFalse;
    if (s.offset < word.size() && c == word[s.offset]) {
      if (++s.offset == word.size()) next_op();
    } else {
      reject();
    }
  }

  void step_arr_open(const Op& op, unsigned char c) {
    if (s.offset == 0) {
      if (c == '[') s.offset = 1;
      else reject();
      return;
    }
    if (s.offset == 1 && c == ']' && op.allow_empty) {
      enter(op.target);
      return;
    }
    std::size_t text_idx = s.offset - 1;
    if (text_idx < op.text.size() && c == static_cast<unsigned char>(op.text[text_idx])) {
      if (++s.offset - 1 == op.text.size()) next_op();
    } else {
      reject();
    }
  }

  void step_arr_sep(const Op& op, unsigned char c) {
    if (s.mode == 0) {
      if (c == ',') {
        s.mode = 1;
        s.offset = 0;
      } else if (c == static_cast<unsigned char>(op.close_text[0])) {
        s.mode = 2;
        s.offset = 1;
        if (op.close_text.size() == 1) next_op();
      } else {
        reject();
      }
      return;
    }
    const std::string& text = s.mode == 1 ? op.sep_text : op.close_text;
    if (s.offset < text.size() && c == static_cast<unsigned char>(text[s.offset])) {
      ++s.offset;
      if (s.offset == text.size()) {
        if (s.mode == 1) enter(op.target);
        else next_op();
      }
    } else {
      reject();
    }
  }

  void step(unsigned char c) {
    if (s.rejected) return;
    if (s.complete) {  // nothing may follow a complete document
      reject();
      return;
    }
    const Op& op = program()[s.pc];
    switch (op.kind) {
      case OpKind::Lit:
        if (s.offset < op.text.size() && c == static_cast<unsigned char>(op.text[s.offset])) {
          if (++s.offset == op.text.size()) next_op();
        } else {
          reject();
        }
        break;
      case OpKind::Str: step_str(op, c); break;
      case OpKind::Bool: step_bool(c); break;
      case OpKind::ArrOpen: step_arr_open(op, c); break;
      case OpKind::ArrSep: step_arr_sep(op, c); break;
      case OpKind::Accept: reject(); break;
    }
    if (!s.rejected) ++s.consumed;
  }
};

}  // namespace

RecognizerState recognizer_start() {
  RecognizerState s;
  Machine m{s};
  m.enter(0);
  return m.s;
}

RecognizerState feed(RecognizerState state, std::string_view bytes) {
  Machine m{state};
  for (char c : bytes) {
    if (m.s.rejected) break;
    m.step(static_cast<unsigned char>(c));
  }
  return m.s;
}

PrefixClass classify(const RecognizerState& state) {
  return state.complete ? PrefixClass::ValidComplete : PrefixClass::ValidPrefix;
}

bool accepts_document(std::string_view text) {
  RecognizerState s = feed(recognizer_start(), text);
  return !s.rejected && s.complete;
}

}  // namespace sfckit::reduced
