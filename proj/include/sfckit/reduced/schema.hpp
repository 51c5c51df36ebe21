#pragma once

#include <string_view>

namespace sfckit::reduced {

// JSON Schema (draft-07) for the reduced-text document, as attached to
// schema-constrained generation requests and shipped under docs/.
std::string_view document_schema_json();

}  // namespace sfckit::reduced
