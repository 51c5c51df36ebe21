#include "sfckit/reduced/grammar.hpp"

#include <sstream>

#include "format.hpp"

namespace sfckit::reduced {

namespace {

std::string quoted(std::string_view raw) {
  std::string out = "\"";
  for (unsigned char c : raw) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out.push_back(static_cast<char>(c));
    }
  }
  out.push_back('"');
  return out;
}

std::string cat(std::initializer_list<std::string> parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out.push_back(' ');
    out += p;
  }
  return out;
}

}  // namespace

GrammarDescription grammar() {
  namespace f = fmt;
  std::ostringstream os;
  auto rule = [&](std::string_view lhs, const std::string& rhs) {
    os << lhs << " ::= " << rhs << "\n";
  };
  auto q = [](std::string_view s) { return quoted(s); };

  rule("document", cat({q(f::kDocOpen), "ident_string", q(f::kAfterPou), "variables",
                        q(f::kAfterInput), "variables", q(f::kAfterOutput), "variables",
                        q(f::kAfterLocal), "steps", q(f::kDocClose)}));
  rule("variables", cat({q("[]"), "|", q("["), "var_items",
                         q("\n" + std::string(f::kVarCloseIndent) + "]")}));
  rule("var_items", cat({"var_item", "|", "var_items", q(","), "var_item"}));
  rule("var_item", cat({q("\n" + std::string(f::kVarElemIndent)), "variable"}));
  rule("variable", cat({q(f::kVarOpen), "ident_string", q(f::kVarAfterName), "string1",
                        q(f::kVarAfterType), "opt_string", q(f::kVarClose)}));
  rule("steps", cat({q("["), "step_items",
                     q("\n" + std::string(f::kStepCloseIndent) + "]")}));
  rule("step_items", cat({"step_item", "|", "step_items", q(","), "step_item"}));
  rule("step_item", cat({q("\n" + std::string(f::kStepElemIndent)), "step"}));
  rule("step", cat({q(f::kStepOpen), "ident_string", q(f::kStepAfterName), "boolean",
                    q(f::kStepAfterInitial), "opt_string", q(f::kStepAfterAction),
                    "opt_string", q(f::kStepAfterComment), "children", q(f::kStepClose)}));
  rule("children", cat({q("[]"), "|", q("["), "child_items",
                        q("\n" + std::string(f::kChildCloseIndent) + "]")}));
  rule("child_items", cat({"child_item", "|", "child_items", q(","), "child_item"}));
  rule("child_item", cat({q("\n" + std::string(f::kChildElemIndent)), "child"}));
  rule("child", cat({q(f::kChildOpen), "ident_string", q(f::kChildAfterTarget), "string1",
                     q(f::kChildAfterGuard), "boolean", q(f::kChildClose)}));
  rule("boolean", cat({q("true"), "|", q("false")}));
  rule("opt_string", cat({q("null"), "|", q("\"\""), "|", "string1"}));
  rule("string1", cat({q("\""), "char_seq", q("\"")}));
  rule("char_seq", cat({"char", "|", "char_seq", "char"}));
  rule("char", "plain_char | escape");
  rule("plain_char", "%x20-21 | %x23-5B | %x5D-FF");
  rule("escape", cat({q("\\"), "escape_char", "|", q("\\u"), "hex hex hex hex"}));
  rule("escape_char",
       cat({q("\""), "|", q("\\"), "|", q("b"), "|", q("f"), "|", q("n"), "|", q("r"),
            "|", q("t")}));
  rule("hex", "%x30-39 | %x41-46 | %x61-66");
  rule("ident_string", cat({q("\""), "ident", q("\"")}));
  // No leading digit, no double underscore, no trailing underscore.
  rule("ident", cat({"ident_first", "|", "ident", q("_"), "alnum_run"}));
  rule("ident_first",
       cat({"letter", "|", "letter alnum_run", "|", q("_"), "alnum_run"}));
  rule("alnum_run", "alnum | alnum alnum_run");
  rule("letter", "%x41-5A | %x61-7A");
  rule("alnum", "%x30-39 | %x41-5A | %x61-7A");

  return {"document", os.str()};
}

}  // namespace sfckit::reduced
