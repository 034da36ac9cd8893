#pragma once

#include "separ/types.hpp"

namespace separ {

struct SubkeySet;

// Words are split into nibbles A||B||C||D with A the most-significant nibble.
// A goes through S1, B through S2, C through S3 and D through S4.
Word sbox_layer(Word m);
Word inv_sbox_layer(Word m);

// Sequential XOR mixing: A^=C, B^=D, C^=B, D^=A, each step seeing the
// results of the previous ones.
Word nibble_mix(Word m);
Word inv_nibble_mix(Word m);

// m ^ rotl(m, 8) ^ rotl(m, 12)
Word linear_diffusion(Word m);
Word inv_linear_diffusion(Word m);

// nibble_mix followed by linear_diffusion: the XOR-linear part of a round.
Word linear_layer(Word m);
Word inv_linear_layer(Word m);

// One b16 body: key XOR, substitution, nibble mix, diffusion.
Word b16_round(Word m, Word round_key);

// Four b16 bodies under sk1..sk4, then XOR sk5, substitute, XOR sk6.
Word enc_block(Word m, const SubkeySet &sk);
Word dec_block(Word c, const SubkeySet &sk);

}  // namespace separ
