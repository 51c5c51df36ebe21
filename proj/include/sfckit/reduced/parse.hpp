#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sfckit/core/model.hpp"

namespace sfckit::reduced {

// Syntax errors point at the first offending byte; schema errors name the
// missing, duplicated, unknown, or mistyped field.
struct DocumentError {
  enum class Kind { Syntax, Schema };
  Kind kind = Kind::Syntax;
  std::size_t position = 0;
  std::string found;                   // Syntax: offending byte or "end of input"
  std::vector<std::string> expected;   // Syntax: expected-token set
  std::string field;                   // Schema: offending field name
  std::string message;
};

struct ParseReducedResult {
  std::optional<core::ReducedSfc> chart;
  std::optional<DocumentError> error;

  bool ok() const { return chart.has_value(); }
};

// Lenient parse of the reduced-text format: whitespace is free-form, field
// order and content are not. The result may still fail validate_reduced;
// syntactic shape and chart validity are separate concerns.
ParseReducedResult parse_reduced(std::string_view text);

}  // namespace sfckit::reduced
