#pragma once

#include <string_view>

// Literal segments of the canonical reduced-text format. The serializer, the
// incremental recognizer, and the grammar export are all built from these so
// the three stay in lockstep.
namespace sfckit::reduced::fmt {

inline constexpr std::string_view kDocOpen = "{\n  \"pou_name\": ";
inline constexpr std::string_view kAfterPou = ",\n  \"variables\": {\n    \"input\": ";
inline constexpr std::string_view kAfterInput = ",\n    \"output\": ";
inline constexpr std::string_view kAfterOutput = ",\n    \"local\": ";
inline constexpr std::string_view kAfterLocal = "\n  },\n  \"steps\": ";
inline constexpr std::string_view kDocClose = "\n}";

// Variable entries live at depth 3 (keys at depth 4).
inline constexpr std::string_view kVarElemIndent = "      ";
inline constexpr std::string_view kVarCloseIndent = "    ";
inline constexpr std::string_view kVarOpen = "{\n        \"name\": ";
inline constexpr std::string_view kVarAfterName = ",\n        \"type\": ";
inline constexpr std::string_view kVarAfterType = ",\n        \"default\": ";
inline constexpr std::string_view kVarClose = "\n      }";

// Step entries live at depth 2 (keys at depth 3).
inline constexpr std::string_view kStepElemIndent = "    ";
inline constexpr std::string_view kStepCloseIndent = "  ";
inline constexpr std::string_view kStepOpen = "{\n      \"name\": ";
inline constexpr std::string_view kStepAfterName = ",\n      \"initial\": ";
inline constexpr std::string_view kStepAfterInitial = ",\n      \"action\": ";
inline constexpr std::string_view kStepAfterAction = ",\n      \"comment\": ";
inline constexpr std::string_view kStepAfterComment = ",\n      \"children\": ";
inline constexpr std::string_view kStepClose = "\n    }";

// Child entries live at depth 4 (keys at depth 5).
inline constexpr std::string_view kChildElemIndent = "        ";
inline constexpr std::string_view kChildCloseIndent = "      ";
inline constexpr std::string_view kChildOpen = "{\n          \"target\": ";
inline constexpr std::string_view kChildAfterTarget = ",\n          \"guard\": ";
inline constexpr std::string_view kChildAfterGuard = ",\n          \"jump\": ";
inline constexpr std::string_view kChildClose = "\n        }";

}  // namespace sfckit::reduced::fmt
