#include "sfckit/core/model.hpp"

#include <cctype>

namespace sfckit::core {

std::string_view to_string(VarSection s) {
  switch (s) {
    case VarSection::Input: return "input";
    case VarSection::Output: return "output";
    case VarSection::Local: return "local";
  }
  return "local";
}

const StepNode* ReducedSfc::find_step(std::string_view name) const {
  for (const auto& s : steps) {
    if (ident_equal(s.name, name)) return &s;
  }
  return nullptr;
}

int ReducedSfc::step_index(std::string_view name) const {
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (ident_equal(steps[i].name, name)) return static_cast<int>(i);
  }
  return -1;
}

bool is_valid_identifier(std::string_view s) {
  if (s.empty()) return false;
  auto is_letter = [](unsigned char c) { return std::isalpha(c) != 0; };
  if (!is_letter(s[0]) && s[0] != '_') return false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    unsigned char c = s[i];
    if (!(std::isalnum(c) || c == '_')) return false;
    if (c == '_' && i + 1 < s.size() && s[i + 1] == '_') return false;
  }
  if (s.back() == '_') return false;
  return true;
}

std::string ident_fold(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (unsigned char c : s) out.push_back(static_cast<char>(std::tolower(c)));
  return out;
}

bool ident_equal(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(a[i])) !=
        std::tolower(static_cast<unsigned char>(b[i]))) {
      return false;
    }
  }
  return true;
}

std::string_view trim(std::string_view s) {
  auto is_space = [](unsigned char c) { return std::isspace(c) != 0; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

}  // namespace sfckit::core
