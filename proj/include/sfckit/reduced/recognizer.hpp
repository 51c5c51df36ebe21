#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace sfckit::reduced {

// Incremental byte-level recognizer for the canonical reduced-text format.
// Drives constrained decoding: a state is kept per decode beam, each candidate
// byte sequence is fed, and anything that can no longer extend to a complete
// canonical document is rejected at the first dead byte.
//
// The recognizer is strict: it accepts exactly the canonical byte layout
// (fixed field order, two-space indentation, LF endings), unlike
// parse_reduced which tolerates free-form whitespace.
struct RecognizerState {
  std::uint32_t pc = 0;        // index into the format program
  std::uint32_t offset = 0;    // progress within the current op
  std::uint8_t mode = 0;       // sub-state (string body, escape, branch arm)
  std::uint32_t aux = 0;       // pending hex digits / matched char count
  std::uint64_t consumed = 0;  // total bytes fed so far
  bool complete = false;
  bool rejected = false;
  std::uint64_t reject_pos = 0;  // offset of the first unextendable byte
};

enum class PrefixClass { ValidPrefix, ValidComplete };

RecognizerState recognizer_start();

// Feeds bytes one chunk at a time; chunking never changes the outcome.
// Returns the advanced state; on rejection `rejected` is set and `reject_pos`
// holds the byte offset of the first position with no valid continuation.
// Feeding a rejected or complete-and-extended state keeps it rejected.
RecognizerState feed(RecognizerState state, std::string_view bytes);

// Precondition: !state.rejected.
PrefixClass classify(const RecognizerState& state);

// Convenience: true when `text` is a complete canonical document.
bool accepts_document(std::string_view text);

}  // namespace sfckit::reduced
