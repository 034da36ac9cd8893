#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "separ/types.hpp"

namespace separ {

// Feedback taps for a 16-bit Fibonacci LFSR. Each clock shifts left by one and
// feeds the parity of (state & taps) into bit 0.
struct LfsrSpec {
  Word taps = 0xD008;
  std::string description = "x^16 + x^15 + x^13 + x^4 + 1";

  // x^16 + x^15 + x^13 + x^4 + 1
  static LfsrSpec standard();
  static LfsrSpec from_taps(Word taps);
  // Honors SEPAR_LFSR_TAPS (hex, optional 0x prefix); standard() when unset.
  // Throws HexError for a malformed value.
  static LfsrSpec from_environment();

  bool operator==(const LfsrSpec &other) const { return taps == other.taps; }
};

// Throws std::invalid_argument for a zero state.
Word lfsr_clock(Word state, const LfsrSpec &spec);

// Steps until the seed recurs; nullopt when it does not recur within 2^16
// steps (singular feedback) or the seed is zero.
std::optional<std::uint32_t> lfsr_period(Word seed, const LfsrSpec &spec);

bool is_maximal_length(const LfsrSpec &spec);

}  // namespace separ
