#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace separ::analysis {

using Histogram = std::array<std::uint64_t, 256>;

Histogram histogram(std::span<const std::uint8_t> data);

// Shannon entropy in bits per octet. Throws std::invalid_argument when empty.
double entropy(std::span<const std::uint8_t> data);

// Pearson correlation between data[0..n-k) and data[k..n) for k = 0..max_lag.
// Entry 0 is 1. A lag whose two windows do not both vary has no defined
// correlation and is nullopt. Throws std::invalid_argument unless
// max_lag < data.size().
using Correlogram = std::vector<std::optional<double>>;
Correlogram autocorrelation_serial(std::span<const std::uint8_t> data, std::size_t max_lag);
Correlogram autocorrelation_parallel(std::span<const std::uint8_t> data, std::size_t max_lag);

struct PeriodicityReport {
  // Shortest block length >= min_len whose repetition (at least twice, the
  // last copy possibly cut short) generates the whole sequence.
  std::optional<std::size_t> period;
  // Longest substring occurring at least twice (occurrences may overlap).
  std::size_t longest_repeat = 0;
  std::size_t repeat_first = 0;
  std::size_t repeat_second = 0;
  // Longest run of one octet value.
  std::size_t longest_run = 0;
  std::uint8_t run_value = 0;
};

// Throws std::invalid_argument when min_len < 2.
PeriodicityReport periodicity(std::span<const std::uint8_t> data, std::size_t min_len = 2);

}  // namespace separ::analysis
