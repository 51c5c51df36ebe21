#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "sfckit/core/diagnostics.hpp"
#include "sfckit/core/model.hpp"

namespace sfckit::reduced {

// Byte range of one step entry inside the canonical document, from the
// step's opening '{' through its closing '}'.
struct StepSpan {
  std::string step_name;
  std::size_t begin = 0;
  std::size_t end = 0;
};

struct SerializedDocument {
  std::string text;
  std::vector<StepSpan> step_spans;  // chart order
};

// Canonical serialization: fixed field order, two-space indentation, LF line
// endings, no trailing whitespace or newline. Unique per chart value.
// Throws ChartValidationError unless the chart passes strict validation.
SerializedDocument serialize_reduced_doc(const core::ReducedSfc& sfc);
std::string serialize_reduced(const core::ReducedSfc& sfc);

// Serialization without the validity gate; used to compute the canonical form
// of arbitrary (possibly invalid) charts, e.g. when classifying mutants.
SerializedDocument serialize_reduced_unchecked(const core::ReducedSfc& sfc);

// Canonical JSON string escaping used throughout the format.
void append_json_string(std::string& out, std::string_view raw);

}  // namespace sfckit::reduced
