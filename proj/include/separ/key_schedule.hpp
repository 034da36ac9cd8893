#pragma once

#include <array>
#include <cstdint>

#include "separ/types.hpp"

namespace separ {

// One 32-bit slice K_index of the master key; k1 is its high half.
struct SegmentKey {
  int index = 1;
  Word k1 = 0;
  Word k2 = 0;

  std::uint32_t value() const { return (std::uint32_t{k1} << 16) | k2; }
  bool operator==(const SegmentKey &) const = default;
};

// The six subkeys of Enc_block n. Stored zero-based: k[0] is sk1.
//   k[4] == k[0] ^ k[1]
//   k[5] == k[2] ^ k[3]
struct SubkeySet {
  int n = 1;
  std::array<Word, 6> k{};

  bool operator==(const SubkeySet &) const = default;
};

// K1 is the most-significant 32 bits of the key.
std::array<SegmentKey, kBlocks> split_master_key(const MasterKey &key);

// In rotl(k1, 6) the 4-bit field at bit positions 7..10 (counted from the
// LSB) is replaced with its S1 image, and the whole word is XORed with n+2.
// sk4 does the same to rotl(k2, 10) with n+3. Throws std::out_of_range
// unless 1 <= n <= 8.
SubkeySet derive_subkeys(const SegmentKey &seg, int n);

// Substitutes the nibble at bits 7..10 of w through S1.
Word substitute_key_field(Word w);

// Subkeys for all eight Enc_blocks of one master key.
class KeySchedule {
 public:
  explicit KeySchedule(const MasterKey &key);

  // n in 1..8
  const SubkeySet &block(int n) const { return sets_.at(static_cast<std::size_t>(n - 1)); }
  const std::array<SubkeySet, kBlocks> &all() const { return sets_; }

 private:
  std::array<SubkeySet, kBlocks> sets_;
};

}  // namespace separ
