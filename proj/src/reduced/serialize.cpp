#include "sfckit/reduced/serialize.hpp"

#include "format.hpp"
#include "sfckit/core/validate.hpp"

namespace sfckit::reduced {

using core::ReducedSfc;
using core::VarSection;

void append_json_string(std::string& out, std::string_view raw) {
  out.push_back('"');
  for (unsigned char c : raw) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\b': out += "\\b"; break;
      case '\t': out += "\\t"; break;
      case '\n': out += "\\n"; break;
      case '\f': out += "\\f"; break;
      case '\r': out += "\\r"; break;
      default:
        if (c < 0x20) {
          static const char* hex = "0123456789abcdef";
          out += "\\u00";
          out.push_back(hex[c >> 4]);
          out.push_back(hex[c & 0xf]);
        } else {
          out.push_back(static_cast<char>(c));
        }
    }
  }
  out.push_back('"');
}

namespace {

void append_opt_string(std::string& out, const std::optional<std::string>& v) {
  if (v) {
    append_json_string(out, *v);
  } else {
    out += "null";
  }
}

void append_variables(std::string& out, const ReducedSfc& sfc, VarSection section) {
  std::vector<const core::VariableDecl*> vars;
  for (const auto& v : sfc.variables) {
    if (v.section == section) vars.push_back(&v);
  }
  if (vars.empty()) {
    out += "[]";
    return;
  }
  out.push_back('[');
  for (std::size_t i = 0; i < vars.size(); ++i) {
    out += i == 0 ? "\n" : ",\n";
    out += fmt::kVarElemIndent;
    out += fmt::kVarOpen;
    append_json_string(out, vars[i]->name);
    out += fmt::kVarAfterName;
    append_json_string(out, vars[i]->data_type);
    out += fmt::kVarAfterType;
    append_opt_string(out, vars[i]->default_value);
    out += fmt::kVarClose;
  }
  out.push_back('\n');
  out += fmt::kVarCloseIndent;
  out.push_back(']');
}

void append_children(std::string& out, const core::StepNode& step) {
  if (step.children.empty()) {
    out += "[]";
    return;
  }
  out.push_back('[');
  for (std::size_t i = 0; i < step.children.size(); ++i) {
    const auto& e = step.children[i];
    out += i == 0 ? "\n" : ",\n";
    out += fmt::kChildElemIndent;
    out += fmt::kChildOpen;
    append_json_string(out, e.target);
    out += fmt::kChildAfterTarget;
    append_json_string(out, e.guard);
    out += fmt::kChildAfterGuard;
    out += e.is_jump ? "true" : "false";
    out += fmt::kChildClose;
  }
  out.push_back('\n');
  out += fmt::kChildCloseIndent;
  out.push_back(']');
}

}  // namespace

SerializedDocument serialize_reduced_unchecked(const ReducedSfc& sfc) {
  SerializedDocument doc;
  std::string& out = doc.text;
  out += fmt::kDocOpen;
  append_json_string(out, sfc.pou_name);
  out += fmt::kAfterPou;
  append_variables(out, sfc, VarSection::Input);
  out += fmt::kAfterInput;
  append_variables(out, sfc, VarSection::Output);
  out += fmt::kAfterOutput;
  append_variables(out, sfc, VarSection::Local);
  out += fmt::kAfterLocal;

  out.push_back('[');
  for (std::size_t i = 0; i < sfc.steps.size(); ++i) {
    const auto& s = sfc.steps[i];
    out += i == 0 ? "\n" : ",\n";
    out += fmt::kStepElemIndent;
    std::size_t begin = out.size();
    out += fmt::kStepOpen;
    append_json_string(out, s.name);
    out += fmt::kStepAfterName;
    out += s.is_initial ? "true" : "false";
    out += fmt::kStepAfterInitial;
    append_opt_string(out, s.action);
    out += fmt::kStepAfterAction;
    append_opt_string(out, s.comment);
    out += fmt::kStepAfterComment;
    append_children(out, s);
    out += fmt::kStepClose;
    doc.step_spans.push_back({s.name, begin, out.size()});
  }
  if (!sfc.steps.empty()) {
    out.push_back('\n');
    out += fmt::kStepCloseIndent;
  }
  out.push_back(']');
  out += fmt::kDocClose;
  return doc;
}

SerializedDocument serialize_reduced_doc(const ReducedSfc& sfc) {
  auto diags = core::validate_reduced(sfc, /*strict=*/true);
  if (core::has_errors(diags)) throw core::ChartValidationError(std::move(diags));
  return serialize_reduced_unchecked(sfc);
}

std::string serialize_reduced(const ReducedSfc& sfc) {
  return serialize_reduced_doc(sfc).text;
}

}  // namespace sfckit::reduced
