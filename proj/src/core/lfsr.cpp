#include "separ/lfsr.hpp"

#include <bit>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

#include "separ/errors.hpp"
#include "separ/hex.hpp"

namespace separ {

LfsrSpec LfsrSpec::standard() { return LfsrSpec{}; }

LfsrSpec LfsrSpec::from_taps(Word taps) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "taps 0x%04X", taps);
  return LfsrSpec{taps, buf};
}

LfsrSpec LfsrSpec::from_environment() {
  const char *env = std::getenv("SEPAR_LFSR_TAPS");
  if (env == nullptr || *env == '\0') return standard();
  const auto bytes = from_hex(env);
  if (bytes.empty() || bytes.size() > 2) throw HexError("SEPAR_LFSR_TAPS must be 1-4 hex digits");
  Word taps = 0;
  for (std::uint8_t b : bytes) taps = static_cast<Word>((taps << 8) | b);
  if (taps == 0) throw HexError("SEPAR_LFSR_TAPS must be nonzero");
  return from_taps(taps);
}

Word lfsr_clock(Word state, const LfsrSpec &spec) {
  if (state == 0) throw std::invalid_argument("LFSR state must be nonzero");
  const unsigned feedback = std::popcount(static_cast<unsigned>(state & spec.taps)) & 1u;
  return static_cast<Word>((state << 1) | feedback);
}

std::optional<std::uint32_t> lfsr_period(Word seed, const LfsrSpec &spec) {
  if (seed == 0) return std::nullopt;
  Word s = seed;
  for (std::uint32_t n = 1; n <= (1u << 16); ++n) {
    s = lfsr_clock(s, spec);
    if (s == seed) return n;
    if (s == 0) return std::nullopt;
  }
  return std::nullopt;
}

bool is_maximal_length(const LfsrSpec &spec) {
  const auto p = lfsr_period(1, spec);
  return p && *p == 0xFFFFu;
}

}  // namespace separ
