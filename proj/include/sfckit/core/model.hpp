#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sfckit::core {

// Variable interface section of a chart.
enum class VarSection { Input, Output, Local };

std::string_view to_string(VarSection s);

struct VariableDecl {
  std::string name;
  std::string data_type;                        // ST type name, e.g. BOOL, INT, TIME
  std::optional<std::string> default_value;     // ST literal text
  VarSection section = VarSection::Local;

  bool operator==(const VariableDecl&) const = default;
};

// Guarded edge to a child step. `is_jump` marks edges drawn as jump steps.
struct Edge {
  std::string guard;       // ST boolean expression source text
  std::string target;      // step name
  bool is_jump = false;

  bool operator==(const Edge&) const = default;
};

struct StepNode {
  std::string name;
  bool is_initial = false;
  std::optional<std::string> action;   // ST statement list; empty string is a present-but-empty action
  std::optional<std::string> comment;
  std::vector<Edge> children;          // order is significant and preserved by all codecs

  bool operator==(const StepNode&) const = default;
};

// The reduced representation of one SFC POU.
struct ReducedSfc {
  std::string pou_name;
  std::vector<VariableDecl> variables;
  std::vector<StepNode> steps;         // chart order

  bool operator==(const ReducedSfc&) const = default;

  const StepNode* find_step(std::string_view name) const;
  int step_index(std::string_view name) const;   // -1 when absent
};

// IEC identifier rules: letter or underscore start, letters/digits/underscores,
// no double underscore, no trailing underscore.
bool is_valid_identifier(std::string_view s);

// Case-insensitive comparison used for identifier equality (IEC convention).
bool ident_equal(std::string_view a, std::string_view b);
std::string ident_fold(std::string_view s);

// Guard texts compare byte-identical after trimming surrounding whitespace.
std::string_view trim(std::string_view s);

}  // namespace sfckit::core
