#include "separ/block.hpp"

#include <array>

#include "separ/key_schedule.hpp"
#include "separ/primitives.hpp"
#include "separ/sbox.hpp"

namespace separ {

namespace {

constexpr std::array<NibbleTable, 4> invert_tables(const std::array<NibbleTable, 4> &fwd) {
  std::array<NibbleTable, 4> inv{};
  for (std::size_t s = 0; s < 4; ++s) {
    for (std::uint8_t x = 0; x < 16; ++x) inv[s][fwd[s][x]] = x;
  }
  return inv;
}

constexpr std::array<NibbleTable, 4> kInverseTables = invert_tables(kSboxTables);

constexpr Word diffusion(Word m) { return static_cast<Word>(m ^ rotl(m, 8) ^ rotl(m, 12)); }

// Columns of the inverse of the diffusion matrix over GF(2): inverse(e_i).
// Reduces (image, preimage) pairs of the basis until every image is a unit
// vector.
constexpr std::array<Word, 16> invert_diffusion() {
  std::array<Word, 16> image{};
  std::array<Word, 16> pre{};
  for (unsigned i = 0; i < 16; ++i) {
    pre[i] = static_cast<Word>(1u << i);
    image[i] = diffusion(pre[i]);
  }
  for (unsigned bit = 0; bit < 16; ++bit) {
    const Word mask = static_cast<Word>(1u << bit);
    unsigned pivot = bit;
    while (pivot < 16 && (image[pivot] & mask) == 0) ++pivot;
    if (pivot == 16) throw "diffusion matrix is singular";
    std::swap(image[bit], image[pivot]);
    std::swap(pre[bit], pre[pivot]);
    for (unsigned r = 0; r < 16; ++r) {
      if (r != bit && (image[r] & mask) != 0) {
        image[r] ^= image[bit];
        pre[r] ^= pre[bit];
      }
    }
  }
  return pre;
}

constexpr std::array<Word, 16> kInverseDiffusion = invert_diffusion();

constexpr Word substitute(Word m, const std::array<NibbleTable, 4> &t) {
  return static_cast<Word>((t[0][(m >> 12) & 0xF] << 12) | (t[1][(m >> 8) & 0xF] << 8) |
                           (t[2][(m >> 4) & 0xF] << 4) | t[3][m & 0xF]);
}

}  // namespace

Word sbox_layer(Word m) { return substitute(m, kSboxTables); }
Word inv_sbox_layer(Word m) { return substitute(m, kInverseTables); }

Word nibble_mix(Word m) {
  unsigned a = (m >> 12) & 0xF, b = (m >> 8) & 0xF, c = (m >> 4) & 0xF, d = m & 0xF;
  a ^= c;
  b ^= d;
  c ^= b;
  d ^= a;
  return static_cast<Word>((a << 12) | (b << 8) | (c << 4) | d);
}

Word inv_nibble_mix(Word m) {
  unsigned a = (m >> 12) & 0xF, b = (m >> 8) & 0xF, c = (m >> 4) & 0xF, d = m & 0xF;
  d ^= a;
  c ^= b;
  b ^= d;
  a ^= c;
  return static_cast<Word>((a << 12) | (b << 8) | (c << 4) | d);
}

Word linear_diffusion(Word m) { return diffusion(m); }

// The diffusion matrix is circulant, so its inverse is too: an XOR of the
// rotations named by the set bits of the inverse's first column.
Word inv_linear_diffusion(Word m) {
  constexpr Word rotations = kInverseDiffusion[0];
  Word out = 0;
  for (unsigned r = 0; r < 16; ++r) {
    if ((rotations >> r) & 1u) out ^= rotl(m, r);
  }
  return out;
}

Word linear_layer(Word m) { return linear_diffusion(nibble_mix(m)); }
Word inv_linear_layer(Word m) { return inv_nibble_mix(inv_linear_diffusion(m)); }

Word b16_round(Word m, Word round_key) {
  return linear_layer(sbox_layer(static_cast<Word>(m ^ round_key)));
}

Word enc_block(Word m, const SubkeySet &sk) {
  for (std::size_t j = 0; j < 4; ++j) m = b16_round(m, sk.k[j]);
  m = sbox_layer(static_cast<Word>(m ^ sk.k[4]));
  return static_cast<Word>(m ^ sk.k[5]);
}

Word dec_block(Word c, const SubkeySet &sk) {
  Word m = inv_sbox_layer(static_cast<Word>(c ^ sk.k[5]));
  m ^= sk.k[4];
  for (std::size_t j = 4; j-- > 0;) {
    m = inv_sbox_layer(inv_linear_layer(m));
    m ^= sk.k[j];
  }
  return m;
}

}  // namespace separ
