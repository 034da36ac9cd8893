#pragma once

#include <cstdint>

namespace separ::analysis {

// Equation and variable counts of the algebraic description: each 4-bit
// S-box contributes 21 quadratic equations in 8 variables.
struct AlgebraicComplexity {
  std::uint64_t sboxes = 0;
  std::uint64_t equations = 0;
  std::uint64_t variables = 0;
  bool operator==(const AlgebraicComplexity &) const = default;
};

inline constexpr std::uint64_t kEquationsPerSbox = 21;
inline constexpr std::uint64_t kVariablesPerSbox = 8;

constexpr AlgebraicComplexity algebraic_complexity_of(std::uint64_t total_sboxes) {
  return {total_sboxes, kEquationsPerSbox * total_sboxes, kVariablesPerSbox * total_sboxes};
}

constexpr AlgebraicComplexity algebraic_complexity(std::uint64_t sboxes_per_encblock, std::uint64_t encblocks,
                                                   std::uint64_t keyschedule_sboxes) {
  return algebraic_complexity_of(sboxes_per_encblock * encblocks + keyschedule_sboxes);
}

}  // namespace separ::analysis
