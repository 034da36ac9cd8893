#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "separ/key_schedule.hpp"
#include "separ/types.hpp"

namespace separ::analysis {

inline constexpr int kMaxIterations = 5;

// `iterations` chained b16 bodies (1..5); body j is keyed with subkey k[j-1],
// so up to sk5 is consumed. Throws std::out_of_range for other counts.
Word b16_chain(Word x, const SubkeySet &sk, int iterations);

// Full 2^16-entry table of b16_chain.
std::vector<Word> b16_chain_table(const SubkeySet &sk, int iterations);

// #{x in F_2^16 : F(x) ^ F(x ^ a) = b}. Throws std::invalid_argument when a == 0.
std::uint32_t diff_count(const SubkeySet &sk, Word a, Word b, int iterations);

// Output-difference histogram of one input difference over all 2^16 inputs.
std::vector<std::uint32_t> diff_row(std::span<const Word> table, Word a);

struct DiffMax {
  std::uint32_t count = 0;
  Word a = 0;
  Word b = 0;
  bool operator==(const DiffMax &) const = default;
};

// max over the given nonzero input differences (all 65535 when empty) and
// all output differences of the differential count. Ties resolve to the
// smallest a, then the smallest b, so both variants agree exactly.
DiffMax diff_max_serial(std::span<const Word> table, std::span<const Word> inputs = {});
DiffMax diff_max_parallel(std::span<const Word> table, std::span<const Word> inputs = {});

}  // namespace separ::analysis
