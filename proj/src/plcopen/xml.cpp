#include "sfckit/plcopen/xml.hpp"

#include <cctype>
#include <sstream>

namespace sfckit::xml {

const std::string* Element::attr(std::string_view key) const {
  for (const auto& [k, v] : attrs) {
    if (k == key) return &v;
  }
  return nullptr;
}

const Element* Element::child(std::string_view name) const {
  for (const auto& n : children) {
    if (const auto* el = std::get_if<std::unique_ptr<Element>>(&n)) {
      if ((*el)->name == name) return el->get();
    }
  }
  return nullptr;
}

std::vector<const Element*> Element::children_named(std::string_view name) const {
  std::vector<const Element*> out;
  for (const auto& n : children) {
    if (const auto* el = std::get_if<std::unique_ptr<Element>>(&n)) {
      if ((*el)->name == name) out.push_back(el->get());
    }
  }
  return out;
}

std::vector<const Element*> Element::child_elements() const {
  std::vector<const Element*> out;
  for (const auto& n : children) {
    if (const auto* el = std::get_if<std::unique_ptr<Element>>(&n)) {
      out.push_back(el->get());
    }
  }
  return out;
}

std::string Element::text() const {
  std::string out;
  for (const auto& n : children) {
    if (const auto* t = std::get_if<std::string>(&n)) out += *t;
  }
  return out;
}

Element& Element::add_child(std::string name) {
  auto el = std::make_unique<Element>();
  el->name = std::move(name);
  children.emplace_back(std::move(el));
  return *std::get<std::unique_ptr<Element>>(children.back());
}

void Element::set_attr(std::string key, std::string value) {
  attrs.emplace_back(std::move(key), std::move(value));
}

void Element::add_text(std::string text) { children.emplace_back(std::move(text)); }

namespace {

struct ParseFail {};

struct Parser {
  std::string_view src;
  std::size_t i = 0;
  std::optional<XmlError> error;

  bool at_end() const { return i >= src.size(); }
  unsigned char peek(std::size_t off = 0) const {
    return i + off < src.size() ? static_cast<unsigned char>(src[i + off]) : 0;
  }
  bool starts_with(std::string_view s) const { return src.substr(i, s.size()) == s; }

  [[noreturn]] void fail(std::string message) {
    error = XmlError{i, std::move(message)};
    throw ParseFail{};
  }

  void skip_ws() {
    while (!at_end() && std::isspace(peek())) ++i;
  }

  void skip_misc() {
    for (;;) {
      skip_ws();
      if (starts_with("<?")) {
        auto end = src.find("?>", i);
        if (end == std::string_view::npos) fail("unterminated processing instruction");
        i = end + 2;
      } else if (starts_with("<!--")) {
        auto end = src.find("-->", i);
        if (end == std::string_view::npos) fail("unterminated comment");
        i = end + 3;
      } else if (starts_with("<!DOCTYPE")) {
        auto end = src.find('>', i);
        if (end == std::string_view::npos) fail("unterminated DOCTYPE");
        i = end + 1;
      } else {
        return;
      }
    }
  }

  static bool is_name_char(unsigned char c) {
    return std::isalnum(c) || c == '_' || c == '-' || c == '.' || c == ':';
  }

  std::string parse_name() {
    std::size_t begin = i;
    while (!at_end() && is_name_char(peek())) ++i;
    if (i == begin) fail("expected a name");
    return std::string(src.substr(begin, i - begin));
  }

  void decode_entity(std::string& out) {
    // at '&'
    auto semi = src.find(';', i);
    if (semi == std::string_view::npos || semi - i > 12) fail("malformed entity");
    std::string_view ent = src.substr(i + 1, semi - i - 1);
    if (ent == "lt") out.push_back('<');
    else if (ent == "gt") out.push_back('>');
    else if (ent == "amp") out.push_back('&');
    else if (ent == "quot") out.push_back('"');
    else if (ent == "apos") out.push_back('\'');
    else if (!ent.empty() && ent[0] == '#') {
      unsigned cp = 0;
      if (ent.size() > 1 && (ent[1] == 'x' || ent[1] == 'X')) {
        for (std::size_t k = 2; k < ent.size(); ++k) {
          unsigned char c = ent[k];
          unsigned d;
          if (c >= '0' && c <= '9') d = c - '0';
          else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
          else if (c >= 'A' && c <= 'F') d = c - 'A' + 10;
          else fail("malformed character reference");
          cp = cp * 16 + d;
        }
      } else {
        for (std::size_t k = 1; k < ent.size(); ++k) {
          if (!std::isdigit(static_cast<unsigned char>(ent[k]))) {
            fail("malformed character reference");
          }
          cp = cp * 10 + (ent[k] - '0');
        }
      }
      if (cp == 0 || cp > 0x10ffff) fail("character reference out of range");
      if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
      } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xc0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3f)));
      } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xe0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3f)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3f)));
      } else {
        out.push_back(static_cast<char>(0xf0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3f)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3f)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3f)));
      }
    } else {
      fail("unknown entity '&" + std::string(ent) + ";'");
    }
    i = semi + 1;
  }

  std::string parse_attr_value() {
    unsigned char quote = peek();
    if (quote != '"' && quote != '\'') fail("expected quoted attribute value");
    ++i;
    std::string out;
    while (!at_end() && peek() != quote) {
      if (peek() == '&') decode_entity(out);
      else if (peek() == '<') fail("'<' in attribute value");
      else out.push_back(static_cast<char>(src[i++]));
    }
    if (at_end()) fail("unterminated attribute value");
    ++i;
    return out;
  }

  std::unique_ptr<Element> parse_element() {
    if (peek() != '<') fail("expected an element");
    ++i;
    auto el = std::make_unique<Element>();
    el->name = parse_name();
    for (;;) {
      skip_ws();
      if (starts_with("/>")) {
        i += 2;
        return el;
      }
      if (peek() == '>') {
        ++i;
        break;
      }
      std::string key = parse_name();
      skip_ws();
      if (peek() != '=') fail("expected '=' after attribute name");
      ++i;
      skip_ws();
      el->set_attr(std::move(key), parse_attr_value());
    }
    // content
    std::string pending_text;
    bool has_element_child = false;
    auto flush_text = [&] {
      if (pending_text.empty()) return;
      el->add_text(std::move(pending_text));
      pending_text.clear();
    };
    for (;;) {
      if (at_end()) fail("unterminated element <" + el->name + ">");
      if (starts_with("</")) {
        i += 2;
        std::string closing = parse_name();
        if (closing != el->name) {
          fail("mismatched closing tag </" + closing + "> for <" + el->name + ">");
        }
        skip_ws();
        if (peek() != '>') fail("expected '>'");
        ++i;
        if (has_element_child) {
          // Whitespace between child elements is layout, not data.
          bool only_ws = true;
          for (unsigned char c : pending_text) {
            if (!std::isspace(c)) { only_ws = false; break; }
          }
          if (only_ws) pending_text.clear();
        }
        flush_text();
        return el;
      }
      if (starts_with("<![CDATA[")) {
        i += 9;
        auto end = src.find("]]>", i);
        if (end == std::string_view::npos) fail("unterminated CDATA section");
        pending_text += std::string(src.substr(i, end - i));
        i = end + 3;
        continue;
      }
      if (starts_with("<!--")) {
        auto end = src.find("-->", i);
        if (end == std::string_view::npos) fail("unterminated comment");
        i = end + 3;
        continue;
      }
      if (peek() == '<') {
        bool only_ws = true;
        for (unsigned char c : pending_text) {
          if (!std::isspace(c)) { only_ws = false; break; }
        }
        if (only_ws) pending_text.clear();
        flush_text();
        has_element_child = true;
        el->children.emplace_back(parse_element());
        continue;
      }
      if (peek() == '&') {
        decode_entity(pending_text);
        continue;
      }
      pending_text.push_back(static_cast<char>(src[i++]));
    }
  }
};

void write_element(std::ostringstream& os, const Element& el, int depth) {
  auto indent = [&](int d) {
    for (int k = 0; k < d; ++k) os << "  ";
  };
  indent(depth);
  os << '<' << el.name;
  for (const auto& [k, v] : el.attrs) {
    os << ' ' << k << "=\"" << escape_attr(v) << '"';
  }
  if (el.children.empty()) {
    os << "/>\n";
    return;
  }
  bool has_text = false;
  for (const auto& n : el.children) {
    if (std::holds_alternative<std::string>(n)) has_text = true;
  }
  if (has_text) {
    // Inline so character data survives byte-exactly.
    os << '>';
    for (const auto& n : el.children) {
      if (const auto* t = std::get_if<std::string>(&n)) os << escape_text(*t);
      else os << "";  // elements never mix with text in this subset
    }
    os << "</" << el.name << ">\n";
    return;
  }
  os << ">\n";
  for (const auto& n : el.children) {
    write_element(os, *std::get<std::unique_ptr<Element>>(n), depth + 1);
  }
  indent(depth);
  os << "</" << el.name << ">\n";
}

}  // namespace

ParseResult parse(std::string_view text) {
  Parser p{text};
  ParseResult result;
  try {
    p.skip_misc();
    result.root = p.parse_element();
    p.skip_misc();
    if (!p.at_end()) p.fail("trailing content after root element");
  } catch (const ParseFail&) {
    result.root = nullptr;
    result.error = p.error;
  }
  return result;
}

std::string serialize(const Element& root) {
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"utf-8\"?>\n";
  write_element(os, root, 0);
  return os.str();
}

std::string escape_text(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  for (char c : raw) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string escape_attr(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  for (char c : raw) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      case '\n': out += "&#10;"; break;
      case '\t': out += "&#9;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

}  // namespace sfckit::xml
