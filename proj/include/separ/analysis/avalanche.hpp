#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "separ/cipher.hpp"
#include "separ/types.hpp"

namespace separ::analysis {

enum class FlipTarget { None, Plaintext, Key, Iv };

// Bit positions count from the most-significant bit of the first octet.
struct FlipSpec {
  FlipTarget target = FlipTarget::None;
  std::size_t bit = 0;
};

struct AvalancheReport {
  std::size_t distance = 0;
  std::size_t bits = 0;
  std::string base_ct;
  std::string flipped_ct;
};

// Encrypts pt and its single-bit variant and compares the ciphertexts.
// Throws PaddingError for odd-length pt and std::out_of_range when the flip
// position lies outside its target.
AvalancheReport avalanche(const MasterKey &key, const Nonce &nonce, std::span<const std::uint8_t> pt,
                          FlipSpec flip, const LfsrSpec &lfsr = LfsrSpec::standard());

struct AvalancheSummary {
  std::size_t trials = 0;
  std::size_t bits = 0;
  double mean = 0.0;
  double stddev = 0.0;
  std::size_t min = 0;
  std::size_t max = 0;
};

// `trials` flips at positions drawn uniformly from the first `window` bits of
// the target (all of it when window is 0), using a seeded generator.
AvalancheSummary avalanche_trials(const MasterKey &key, const Nonce &nonce, std::span<const std::uint8_t> pt,
                                  FlipTarget target, std::size_t trials, std::uint64_t seed,
                                  std::size_t window = 0, const LfsrSpec &lfsr = LfsrSpec::standard());

std::size_t hamming_distance(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b);

}  // namespace separ::analysis
