#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sfckit::core {

enum class DiagCode {
  InitStepError,
  TransitionError,
  DuplicateName,
  BadIdentifier,
  IllegalJump,
  NormalizationError,
};

enum class Severity { Error, Warning };

std::string_view to_string(DiagCode c);

struct Diagnostic {
  DiagCode code = DiagCode::TransitionError;
  Severity severity = Severity::Error;
  std::string element;   // offending step/edge/variable name
  std::string message;

  bool operator==(const Diagnostic&) const = default;
};

bool has_errors(const std::vector<Diagnostic>& diags);

// Compiler-style rendering: "<file>: <code>: <element>: <message>".
std::string render(const Diagnostic& d, std::string_view file = "");

// Thrown by operations whose precondition is a chart passing validate_reduced.
class ChartValidationError : public std::runtime_error {
 public:
  explicit ChartValidationError(std::vector<Diagnostic> diags);
  const std::vector<Diagnostic>& diagnostics() const { return diags_; }

 private:
  std::vector<Diagnostic> diags_;
};

}  // namespace sfckit::core
