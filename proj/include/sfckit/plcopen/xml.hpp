#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

// Minimal XML document model covering the PLCopen TC6 subset: elements,
// attributes, character data, CDATA, comments (skipped), and the five
// predefined entities plus numeric character references. No DTD handling.
namespace sfckit::xml {

struct Element;
using Node = std::variant<std::unique_ptr<Element>, std::string>;

struct Element {
  std::string name;
  std::vector<std::pair<std::string, std::string>> attrs;  // document order
  std::vector<Node> children;

  const std::string* attr(std::string_view key) const;
  const Element* child(std::string_view name) const;           // first match
  std::vector<const Element*> children_named(std::string_view name) const;
  std::vector<const Element*> child_elements() const;
  std::string text() const;  // concatenated character data of this element

  Element& add_child(std::string name);
  void set_attr(std::string key, std::string value);
  void add_text(std::string text);
};

struct XmlError {
  std::size_t position = 0;
  std::string message;
};

struct ParseResult {
  std::unique_ptr<Element> root;
  std::optional<XmlError> error;

  bool ok() const { return root != nullptr; }
};

ParseResult parse(std::string_view text);

// Deterministic writer: two-space indentation for element children; elements
// holding character data are written inline so the data round-trips exactly.
std::string serialize(const Element& root);

std::string escape_text(std::string_view raw);
std::string escape_attr(std::string_view raw);

}  // namespace sfckit::xml
