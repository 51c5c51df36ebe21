#include "sfckit/reduced/parse.hpp"

#include <initializer_list>

#include "json_reader.hpp"

namespace sfckit::reduced {

namespace {

using json::Value;

struct SchemaFail {};

struct Mapper {
  DocumentError error;

  [[noreturn]] void schema_fail(std::size_t pos, std::string field, std::string message) {
    error.kind = DocumentError::Kind::Schema;
    error.position = pos;
    error.field = std::move(field);
    error.message = std::move(message);
    throw SchemaFail{};
  }

  // Verifies an object holds exactly the given fields, each once, and hands
  // back pointers in schema order.
  std::vector<const Value*> fields(const Value& v, std::string_view what,
                                   std::initializer_list<std::string_view> names) {
    if (v.kind != Value::Kind::Object) {
      schema_fail(v.pos, std::string(what), "expected an object for " + std::string(what));
    }
    std::vector<const Value*> out(names.size(), nullptr);
    for (const auto& m : v.members) {
      bool known = false;
      std::size_t idx = 0;
      for (auto n : names) {
        if (m.key == n) {
          known = true;
          if (out[idx] != nullptr) {
            schema_fail(m.key_pos, m.key,
                        "duplicate field '" + m.key + "' in " + std::string(what));
          }
          out[idx] = m.value;
          break;
        }
        ++idx;
      }
      if (!known) {
        schema_fail(m.key_pos, m.key,
                    "unknown field '" + m.key + "' in " + std::string(what));
      }
    }
    std::size_t idx = 0;
    for (auto n : names) {
      if (out[idx] == nullptr) {
        schema_fail(v.pos, std::string(n),
                    "missing required field '" + std::string(n) + "' in " + std::string(what));
      }
      ++idx;
    }
    return out;
  }

  std::string require_string(const Value& v, std::string_view field) {
    if (v.kind != Value::Kind::String) {
      schema_fail(v.pos, std::string(field),
                  "expected a string for field '" + std::string(field) + "'");
    }
    return v.string;
  }

  std::optional<std::string> string_or_null(const Value& v, std::string_view field) {
    if (v.kind == Value::Kind::Null) return std::nullopt;
    return require_string(v, field);
  }

  bool require_bool(const Value& v, std::string_view field) {
    if (v.kind != Value::Kind::Bool) {
      schema_fail(v.pos, std::string(field),
                  "expected true or false for field '" + std::string(field) + "'");
    }
    return v.boolean;
  }

  const std::vector<Value*>& require_array(const Value& v, std::string_view field) {
    if (v.kind != Value::Kind::Array) {
      schema_fail(v.pos, std::string(field),
                  "expected an array for field '" + std::string(field) + "'");
    }
    return v.items;
  }

  void map_variables(const Value& v, core::VarSection section, core::ReducedSfc& out) {
    const char* section_name = section == core::VarSection::Input    ? "input"
                               : section == core::VarSection::Output ? "output"
                                                                     : "local";
    for (const Value* item : require_array(v, section_name)) {
      auto f = fields(*item, "variable", {"name", "type", "default"});
      core::VariableDecl decl;
      decl.name = require_string(*f[0], "name");
      decl.data_type = require_string(*f[1], "type");
      decl.default_value = string_or_null(*f[2], "default");
      decl.section = section;
      out.variables.push_back(std::move(decl));
    }
  }

  core::StepNode map_step(const Value& v) {
    auto f = fields(v, "step", {"name", "initial", "action", "comment", "children"});
    core::StepNode step;
    step.name = require_string(*f[0], "name");
    step.is_initial = require_bool(*f[1], "initial");
    step.action = string_or_null(*f[2], "action");
    step.comment = string_or_null(*f[3], "comment");
    for (const Value* c : require_array(*f[4], "children")) {
      auto cf = fields(*c, "child", {"target", "guard", "jump"});
      core::Edge e;
      e.target = require_string(*cf[0], "target");
      e.guard = require_string(*cf[1], "guard");
      e.is_jump = require_bool(*cf[2], "jump");
      step.children.push_back(std::move(e));
    }
    return step;
  }

  core::ReducedSfc map_document(const Value& root) {
    auto f = fields(root, "document", {"pou_name", "variables", "steps"});
    core::ReducedSfc sfc;
    sfc.pou_name = require_string(*f[0], "pou_name");
    auto vf = fields(*f[1], "variables", {"input", "output", "local"});
    map_variables(*vf[0], core::VarSection::Input, sfc);
    map_variables(*vf[1], core::VarSection::Output, sfc);
    map_variables(*vf[2], core::VarSection::Local, sfc);
    for (const Value* s : require_array(*f[2], "steps")) {
      sfc.steps.push_back(map_step(*s));
    }
    return sfc;
  }
};

}  // namespace

ParseReducedResult parse_reduced(std::string_view text) {
  ParseReducedResult result;
  json::Document doc = json::parse(text);
  if (!doc.ok()) {
    DocumentError e;
    e.kind = DocumentError::Kind::Syntax;
    if (doc.error) {
      e.position = doc.error->position;
      e.found = doc.error->found;
      e.expected = doc.error->expected;
      e.message = doc.error->message;
    }
    result.error = std::move(e);
    return result;
  }
  Mapper m;
  try {
    result.chart = m.map_document(*doc.root);
  } catch (const SchemaFail&) {
    result.error = std::move(m.error);
  }
  return result;
}

}  // namespace sfckit::reduced
