#pragma once

#include <string>

namespace sfckit::reduced {

// Context-free grammar of the canonical reduced-text format, rendered in an
// EBNF-like form: one production per line, `::=` separator, terminals quoted
// (C-style escapes) or given as %xNN-NN byte classes. Suitable as input for
// external constrained-decoding engines.
struct GrammarDescription {
  std::string start_symbol;
  std::string text;
};

GrammarDescription grammar();

}  // namespace sfckit::reduced
