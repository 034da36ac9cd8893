#pragma once

#include <array>
#include <cstdint>

namespace separ {

// Raw 4-bit lookup table. Not necessarily a permutation; analysis routines
// accept arbitrary tables so that degenerate boxes can be examined too.
using NibbleTable = std::array<std::uint8_t, 16>;

bool is_permutation(const NibbleTable &table);

// A validated bijective 4-bit S-box.
class SboxTable {
 public:
  // Throws std::invalid_argument if the table is not a permutation of 0..15
  // or id is outside 1..4 (id 0 is reserved for ad-hoc boxes).
  SboxTable(int id, const NibbleTable &entries);

  int id() const { return id_; }
  const NibbleTable &entries() const { return entries_; }
  const NibbleTable &inverse_entries() const { return inverse_; }

  // Throws std::out_of_range for x > 15.
  std::uint8_t apply(unsigned x) const;
  std::uint8_t invert(unsigned y) const;

 private:
  int id_;
  NibbleTable entries_;
  NibbleTable inverse_;
};

// The four boxes of the substitution layer, S1 (most-significant nibble)
// through S4 (least-significant nibble).
inline constexpr std::array<NibbleTable, 4> kSboxTables = {{
    {0x1, 0xF, 0xB, 0x2, 0x0, 0x3, 0x5, 0x8, 0x6, 0x9, 0xC, 0x7, 0xD, 0xA, 0xE, 0x4},
    {0x6, 0xA, 0xF, 0x4, 0xE, 0xD, 0x9, 0x2, 0x1, 0x7, 0xC, 0xB, 0x0, 0x3, 0x5, 0x8},
    {0xC, 0x2, 0x6, 0x1, 0x0, 0x3, 0x5, 0x8, 0x7, 0x9, 0xB, 0xE, 0xA, 0xD, 0xF, 0x4},
    {0xD, 0xB, 0x2, 0x7, 0x0, 0x3, 0x5, 0x8, 0x6, 0xC, 0xF, 0x1, 0xA, 0x4, 0x9, 0xE},
}};

// S-box by id 1..4; throws std::out_of_range otherwise.
const SboxTable &sbox(int id);

}  // namespace separ
