#pragma once

#include "separ/types.hpp"

namespace separ {

constexpr Word rotl(Word x, unsigned n) {
  n &= 15u;
  if (n == 0) return x;
  return static_cast<Word>((x << n) | (x >> (16u - n)));
}

constexpr Word rotr(Word x, unsigned n) { return rotl(x, (16u - (n & 15u)) & 15u); }

constexpr Word modadd(Word x, Word y) { return static_cast<Word>(x + y); }
constexpr Word modsub(Word x, Word y) { return static_cast<Word>(x - y); }

}  // namespace separ
