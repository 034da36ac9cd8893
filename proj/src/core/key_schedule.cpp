#include "separ/key_schedule.hpp"

#include <stdexcept>

#include "separ/primitives.hpp"
#include "separ/sbox.hpp"

namespace separ {

namespace {
constexpr unsigned kFieldShift = 7;  // bits 7..10
constexpr Word kFieldMask = static_cast<Word>(0xFu << kFieldShift);
}  // namespace

std::array<SegmentKey, kBlocks> split_master_key(const MasterKey &key) {
  const auto &b = key.bytes();
  std::array<SegmentKey, kBlocks> segs{};
  for (std::size_t j = 0; j < kBlocks; ++j) {
    segs[j].index = static_cast<int>(j + 1);
    segs[j].k1 = static_cast<Word>((b[4 * j] << 8) | b[4 * j + 1]);
    segs[j].k2 = static_cast<Word>((b[4 * j + 2] << 8) | b[4 * j + 3]);
  }
  return segs;
}

Word substitute_key_field(Word w) {
  const unsigned field = (w & kFieldMask) >> kFieldShift;
  const unsigned image = kSboxTables[0][field];
  return static_cast<Word>((w & ~kFieldMask) | (image << kFieldShift));
}

SubkeySet derive_subkeys(const SegmentKey &seg, int n) {
  if (n < 1 || n > 8) throw std::out_of_range("Enc_block index must be in 1..8");
  SubkeySet sk;
  sk.n = n;
  sk.k[0] = seg.k1;
  sk.k[1] = seg.k2;
  sk.k[2] = static_cast<Word>(substitute_key_field(rotl(seg.k1, 6)) ^ (n + 2));
  sk.k[3] = static_cast<Word>(substitute_key_field(rotl(seg.k2, 10)) ^ (n + 3));
  sk.k[4] = static_cast<Word>(sk.k[0] ^ sk.k[1]);
  sk.k[5] = static_cast<Word>(sk.k[2] ^ sk.k[3]);
  return sk;
}

KeySchedule::KeySchedule(const MasterKey &key) {
  const auto segs = split_master_key(key);
  for (std::size_t j = 0; j < kBlocks; ++j) sets_[j] = derive_subkeys(segs[j], static_cast<int>(j + 1));
}

}  // namespace separ
