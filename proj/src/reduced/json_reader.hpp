#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

// Small recursive-descent JSON reader used by the lenient document parser.
// Keeps object member order, keeps duplicate keys (schema mapping reports
// them), and records the byte offset of every value.
namespace sfckit::reduced::json {

struct Value;

struct Member {
  std::string key;
  std::size_t key_pos = 0;
  Value* value = nullptr;  // owned by Value::children arena
};

struct Value {
  enum class Kind { Null, Bool, String, Number, Array, Object };
  Kind kind = Kind::Null;
  std::size_t pos = 0;        // offset of the first byte of this value
  bool boolean = false;
  std::string string;         // String: decoded text; Number: raw spelling
  std::vector<Value*> items;  // Array
  std::vector<Member> members;  // Object
};

struct SyntaxError {
  std::size_t position = 0;             // first offending byte
  std::string found;                    // offending byte or "end of input"
  std::vector<std::string> expected;
  std::string message;
};

struct Document {
  // Arena keeps ownership simple; `root` points into it.
  std::vector<std::unique_ptr<Value>> arena;
  Value* root = nullptr;
  std::optional<SyntaxError> error;

  bool ok() const { return root != nullptr && !error; }
};

// Parses one JSON value covering the whole input (trailing non-whitespace is
// an error). Whitespace is free-form.
Document parse(std::string_view text);

}  // namespace sfckit::reduced::json
