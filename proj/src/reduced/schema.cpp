#include "sfckit/reduced/schema.hpp"

namespace sfckit::reduced {

namespace {

constexpr std::string_view kSchema = R"({
  "$schema": "http://json-schema.org/draft-07/schema#",
  "title": "Reduced SFC document",
  "type": "object",
  "required": ["pou_name", "variables", "steps"],
  "additionalProperties": false,
  "properties": {
    "pou_name": { "$ref": "#/definitions/identifier" },
    "variables": {
      "type": "object",
      "required": ["input", "output", "local"],
      "additionalProperties": false,
      "properties": {
        "input": { "$ref": "#/definitions/variableList" },
        "output": { "$ref": "#/definitions/variableList" },
        "local": { "$ref": "#/definitions/variableList" }
      }
    },
    "steps": {
      "type": "array",
      "minItems": 1,
      "items": { "$ref": "#/definitions/step" }
    }
  },
  "definitions": {
    "identifier": {
      "type": "string",
      "pattern": "^(?!.*__)[A-Za-z_][A-Za-z0-9_]*(?<!_)$"
    },
    "variableList": {
      "type": "array",
      "items": {
        "type": "object",
        "required": ["name", "type", "default"],
        "additionalProperties": false,
        "properties": {
          "name": { "$ref": "#/definitions/identifier" },
          "type": { "type": "string", "minLength": 1 },
          "default": { "type": ["string", "null"] }
        }
      }
    },
    "step": {
      "type": "object",
      "required": ["name", "initial", "action", "comment", "children"],
      "additionalProperties": false,
      "properties": {
        "name": { "$ref": "#/definitions/identifier" },
        "initial": { "type": "boolean" },
        "action": { "type": ["string", "null"] },
        "comment": { "type": ["string", "null"] },
        "children": {
          "type": "array",
          "items": {
            "type": "object",
            "required": ["target", "guard", "jump"],
            "additionalProperties": false,
            "properties": {
              "target": { "$ref": "#/definitions/identifier" },
              "guard": { "type": "string", "minLength": 1 },
              "jump": { "type": "boolean" }
            }
          }
        }
      }
    }
  }
}
)";

}  // namespace

std::string_view document_schema_json() { return kSchema; }

}  // namespace sfckit::reduced
