#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "separ/analysis/rational.hpp"
#include "separ/types.hpp"

namespace separ::analysis {

// A differential trail through `rounds` b16 bodies. differences[0] is the
// input difference and differences[r] the difference after body r. Round
// keys cancel out of XOR differences, so only the S-box layer is
// probabilistic; the linear layer maps differences deterministically.
struct DiffCharacteristic {
  int rounds = 0;
  std::vector<Word> differences;
  Rational probability;

  Word input() const { return differences.front(); }
  Word output() const { return differences.back(); }
};

struct CharacteristicQuery {
  int iterations = 1;
  Rational p_min{1, 4};
  std::optional<Word> input;   // fix the input difference
  std::optional<Word> output;  // fix the output difference
  std::size_t max_results = std::size_t{1} << 22;
  bool parallel = true;
};

// Every trail with probability >= p_min, sorted by probability (descending)
// and then by difference sequence. Throws std::out_of_range for iterations
// outside 1..5, std::invalid_argument for p_min outside (0, 1) or below
// 2^-63 or a zero endpoint, and std::length_error when more than max_results
// trails qualify.
std::vector<DiffCharacteristic> characteristic_search(const CharacteristicQuery &query);
std::vector<DiffCharacteristic> characteristic_search(int iterations, Rational p_min);

// Re-derives a trail's probability from the S-box DDTs: the product of
// DDT_q(in_q, out_q) / 16 over active S-boxes. Zero if any transition is
// impossible.
Rational trail_probability(std::span<const Word> differences);

// "0x0300 -> 0x0500 p=1/536870912"
std::string format_characteristic(const DiffCharacteristic &c, bool with_path = false);

// Lower bounds used for pruning. bounds[r][d] is the minimum weight
// (-log2 probability) of an r-body trail from d ending at `output` (any
// output when unset), or +inf when above max_weight or unreachable.
// bounds[0] marks the admissible end points.
using BoundTables = std::vector<std::vector<double>>;
BoundTables remaining_weight_bounds_serial(int rounds, std::optional<Word> output, double max_weight);
BoundTables remaining_weight_bounds_parallel(int rounds, std::optional<Word> output, double max_weight);

}  // namespace separ::analysis
