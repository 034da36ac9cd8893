#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace separ::analysis {

inline constexpr double kAlpha = 0.01;
inline constexpr std::size_t kSuiteMinBits = 100000;

// One bit per element (0 or 1).
using Bits = std::vector<std::uint8_t>;

// Most-significant bit of each octet first.
Bits bits_from_octets(std::span<const std::uint8_t> octets);

struct StatReport {
  std::string test;
  double statistic = 0.0;
  double p_value = 0.0;
  bool passed = false;
  std::size_t sample_bits = 0;
};

// SP 800-22 statistical tests. Each throws std::invalid_argument when the
// input is too short for the statistic to be computed.
StatReport frequency_test(std::span<const std::uint8_t> bits);
StatReport block_frequency_test(std::span<const std::uint8_t> bits, std::size_t block = 128);
StatReport runs_test(std::span<const std::uint8_t> bits);
// Two reports: the first and second difference statistics.
std::vector<StatReport> serial_test(std::span<const std::uint8_t> bits, unsigned m = 16);
StatReport approximate_entropy_test(std::span<const std::uint8_t> bits, unsigned m = 10);
// Two reports: forward then backward.
std::vector<StatReport> cumulative_sums_test(std::span<const std::uint8_t> bits);

// The six tests above with suite parameters. The serial block length is 16,
// lowered to floor(log2 n) - 3 for shorter inputs so that the test stays
// within its validity bound. Throws std::invalid_argument below 10^5 bits.
std::vector<StatReport> nist_subset(std::span<const std::uint8_t> bits);

// True when every report of the suite passed.
bool all_passed(std::span<const StatReport> reports);

// Incomplete upper gamma Q(a, x).
double igamc(double a, double x);

}  // namespace separ::analysis
