#include "sfckit/core/diagnostics.hpp"

#include <sstream>

namespace sfckit::core {

std::string_view to_string(DiagCode c) {
  switch (c) {
    case DiagCode::InitStepError: return "InitStepError";
    case DiagCode::TransitionError: return "TransitionError";
    case DiagCode::DuplicateName: return "DuplicateName";
    case DiagCode::BadIdentifier: return "BadIdentifier";
    case DiagCode::IllegalJump: return "IllegalJump";
    case DiagCode::NormalizationError: return "NormalizationError";
  }
  return "TransitionError";
}

bool has_errors(const std::vector<Diagnostic>& diags) {
  for (const auto& d : diags) {
    if (d.severity == Severity::Error) return true;
  }
  return false;
}

ChartValidationError::ChartValidationError(std::vector<Diagnostic> diags)
    : std::runtime_error(diags.empty() ? "chart failed validation"
                                       : "chart failed validation: " + render(diags.front())),
      diags_(std::move(diags)) {}

std::string render(const Diagnostic& d, std::string_view file) {
  std::ostringstream os;
  if (!file.empty()) os << file << ": ";
  os << (d.severity == Severity::Error ? "error" : "warning") << ": "
     << to_string(d.code) << ": ";
  if (!d.element.empty()) os << d.element << ": ";
  os << d.message;
  return os.str();
}

}  // namespace sfckit::core
