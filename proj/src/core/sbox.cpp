#include "separ/sbox.hpp"

#include <stdexcept>
#include <string>

namespace separ {

bool is_permutation(const NibbleTable &table) {
  unsigned seen = 0;
  for (std::uint8_t v : table) {
    if (v > 15) return false;
    seen |= 1u << v;
  }
  return seen == 0xFFFFu;
}

SboxTable::SboxTable(int id, const NibbleTable &entries) : id_(id), entries_(entries), inverse_{} {
  if (id < 0 || id > 4) throw std::invalid_argument("S-box id must be in 0..4");
  if (!is_permutation(entries)) throw std::invalid_argument("S-box table is not a permutation");
  for (unsigned x = 0; x < 16; ++x) inverse_[entries_[x]] = static_cast<std::uint8_t>(x);
}

std::uint8_t SboxTable::apply(unsigned x) const {
  if (x > 15) throw std::out_of_range("nibble out of range: " + std::to_string(x));
  return entries_[x];
}

std::uint8_t SboxTable::invert(unsigned y) const {
  if (y > 15) throw std::out_of_range("nibble out of range: " + std::to_string(y));
  return inverse_[y];
}

const SboxTable &sbox(int id) {
  static const std::array<SboxTable, 4> boxes = {
      SboxTable(1, kSboxTables[0]), SboxTable(2, kSboxTables[1]),
      SboxTable(3, kSboxTables[2]), SboxTable(4, kSboxTables[3])};
  if (id < 1 || id > 4) throw std::out_of_range("S-box id must be in 1..4");
  return boxes[static_cast<std::size_t>(id - 1)];
}

}  // namespace separ
