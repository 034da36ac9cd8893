#include "separ/analysis/nist.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include <boost/math/special_functions/gamma.hpp>

namespace separ::analysis {

Bits bits_from_octets(std::span<const std::uint8_t> octets) {
  Bits bits;
  bits.reserve(octets.size() * 8);
  for (std::uint8_t o : octets) {
    for (int i = 7; i >= 0; --i) bits.push_back((o >> i) & 1u);
  }
  return bits;
}

double igamc(double a, double x) {
  if (x <= 0.0) return 1.0;
  return boost::math::gamma_q(a, x);
}

namespace {

StatReport make(std::string name, double stat, double p, std::size_t n) {
  p = std::clamp(p, 0.0, 1.0);
  return {std::move(name), stat, p, p >= kAlpha, n};
}

void need(std::span<const std::uint8_t> bits, std::size_t n, const char *test) {
  if (bits.size() < n) {
    throw std::invalid_argument(std::string(test) + " needs at least " + std::to_string(n) + " bits");
  }
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

// Frequencies of every overlapping m-bit pattern, the sequence wrapped
// around by m - 1 bits.
std::vector<std::uint64_t> pattern_counts(std::span<const std::uint8_t> bits, unsigned m) {
  std::vector<std::uint64_t> counts(std::size_t{1} << m, 0);
  if (m == 0) {
    counts[0] = bits.size();
    return counts;
  }
  const std::size_t n = bits.size();
  const std::uint32_t mask = (std::uint32_t{1} << m) - 1;
  std::uint32_t w = 0;
  for (unsigned i = 0; i + 1 < m; ++i) w = (w << 1) | bits[i % n];
  for (std::size_t i = 0; i < n; ++i) {
    w = ((w << 1) | bits[(i + m - 1) % n]) & mask;
    ++counts[w];
  }
  return counts;
}

double psi_sq(std::span<const std::uint8_t> bits, unsigned m) {
  if (m == 0) return 0.0;
  const auto counts = pattern_counts(bits, m);
  const double n = static_cast<double>(bits.size());
  double s = 0.0;
  for (std::uint64_t c : counts) s += static_cast<double>(c) * static_cast<double>(c);
  return s * static_cast<double>(std::size_t{1} << m) / n - n;
}

double phi(std::span<const std::uint8_t> bits, unsigned m) {
  if (m == 0) return 0.0;
  const auto counts = pattern_counts(bits, m);
  const double n = static_cast<double>(bits.size());
  double s = 0.0;
  for (std::uint64_t c : counts) {
    if (c == 0) continue;
    const double p = static_cast<double>(c) / n;
    s += p * std::log(p);
  }
  return s;
}

// Summation bounds use truncating integer division, as the reference
// implementation does.
double cusum_p(std::int64_t z, std::size_t n_bits) {
  const std::int64_t n = static_cast<std::int64_t>(n_bits);
  const double zz = static_cast<double>(z);
  const double sq = std::sqrt(static_cast<double>(n));
  double s1 = 0.0, s2 = 0.0;
  for (std::int64_t k = (-n / z + 1) / 4; k <= (n / z - 1) / 4; ++k) {
    s1 += normal_cdf(static_cast<double>(4 * k + 1) * zz / sq) - normal_cdf(static_cast<double>(4 * k - 1) * zz / sq);
  }
  for (std::int64_t k = (-n / z - 3) / 4; k <= (n / z - 1) / 4; ++k) {
    s2 += normal_cdf(static_cast<double>(4 * k + 3) * zz / sq) - normal_cdf(static_cast<double>(4 * k + 1) * zz / sq);
  }
  return 1.0 - s1 + s2;
}

}  // namespace

StatReport frequency_test(std::span<const std::uint8_t> bits) {
  need(bits, 1, "frequency test");
  std::int64_t s = 0;
  for (std::uint8_t b : bits) s += b ? 1 : -1;
  const double obs = std::abs(static_cast<double>(s)) / std::sqrt(static_cast<double>(bits.size()));
  return make("Frequency", obs, std::erfc(obs / std::sqrt(2.0)), bits.size());
}

StatReport block_frequency_test(std::span<const std::uint8_t> bits, std::size_t block) {
  if (block == 0) throw std::invalid_argument("block length must be positive");
  need(bits, block, "block frequency test");
  const std::size_t blocks = bits.size() / block;
  double chi = 0.0;
  for (std::size_t i = 0; i < blocks; ++i) {
    std::size_t ones = 0;
    for (std::size_t j = 0; j < block; ++j) ones += bits[i * block + j];
    const double pi = static_cast<double>(ones) / static_cast<double>(block) - 0.5;
    chi += pi * pi;
  }
  chi *= 4.0 * static_cast<double>(block);
  return make("BlockFrequency", chi, igamc(static_cast<double>(blocks) / 2.0, chi / 2.0), bits.size());
}

StatReport runs_test(std::span<const std::uint8_t> bits) {
  need(bits, 2, "runs test");
  const double n = static_cast<double>(bits.size());
  std::size_t ones = 0;
  for (std::uint8_t b : bits) ones += b;
  const double pi = static_cast<double>(ones) / n;
  // Frequency prerequisite: the runs statistic is meaningless on a biased sequence.
  if (std::abs(pi - 0.5) >= 2.0 / std::sqrt(n)) return make("Runs", 0.0, 0.0, bits.size());
  std::size_t v = 1;
  for (std::size_t i = 1; i < bits.size(); ++i) v += bits[i] != bits[i - 1];
  const double vn = static_cast<double>(v);
  const double p = std::erfc(std::abs(vn - 2.0 * n * pi * (1 - pi)) /
                             (2.0 * std::sqrt(2.0 * n) * pi * (1 - pi)));
  return make("Runs", vn, p, bits.size());
}

std::vector<StatReport> serial_test(std::span<const std::uint8_t> bits, unsigned m) {
  if (m < 2 || m > 24) throw std::invalid_argument("serial block length must be in 2..24");
  need(bits, m, "serial test");
  const double p0 = psi_sq(bits, m), p1 = psi_sq(bits, m - 1), p2 = psi_sq(bits, m - 2);
  const double d1 = p0 - p1;
  const double d2 = p0 - 2.0 * p1 + p2;
  return {make("Serial1", d1, igamc(std::ldexp(1.0, static_cast<int>(m) - 2), d1 / 2.0), bits.size()),
          make("Serial2", d2, igamc(std::ldexp(1.0, static_cast<int>(m) - 3), d2 / 2.0), bits.size())};
}

StatReport approximate_entropy_test(std::span<const std::uint8_t> bits, unsigned m) {
  if (m < 1 || m > 23) throw std::invalid_argument("approximate entropy block length must be in 1..23");
  need(bits, m + 1, "approximate entropy test");
  const double n = static_cast<double>(bits.size());
  const double apen = phi(bits, m) - phi(bits, m + 1);
  const double chi = 2.0 * n * (std::log(2.0) - apen);
  return make("ApproximateEntropy", chi, igamc(std::ldexp(1.0, static_cast<int>(m) - 1), chi / 2.0),
              bits.size());
}

std::vector<StatReport> cumulative_sums_test(std::span<const std::uint8_t> bits) {
  need(bits, 1, "cumulative sums test");
  std::int64_t s = 0, fwd = 0;
  for (std::uint8_t b : bits) {
    s += b ? 1 : -1;
    fwd = std::max<std::int64_t>(fwd, std::abs(s));
  }
  std::int64_t back = 0;
  s = 0;
  for (auto it = bits.rbegin(); it != bits.rend(); ++it) {
    s += *it ? 1 : -1;
    back = std::max<std::int64_t>(back, std::abs(s));
  }
  return {make("CumulativeSumsForward", static_cast<double>(fwd), cusum_p(fwd, bits.size()), bits.size()),
          make("CumulativeSumsBackward", static_cast<double>(back), cusum_p(back, bits.size()), bits.size())};
}

std::vector<StatReport> nist_subset(std::span<const std::uint8_t> bits) {
  need(bits, kSuiteMinBits, "the NIST subset");
  const unsigned serial_m = std::min(16u, static_cast<unsigned>(std::bit_width(bits.size()) - 1) - 3);
  std::vector<StatReport> out;
  out.push_back(frequency_test(bits));
  out.push_back(block_frequency_test(bits, 128));
  out.push_back(runs_test(bits));
  for (auto &r : serial_test(bits, serial_m)) out.push_back(std::move(r));
  out.push_back(approximate_entropy_test(bits, 10));
  for (auto &r : cumulative_sums_test(bits)) out.push_back(std::move(r));
  return out;
}

bool all_passed(std::span<const StatReport> reports) {
  return std::all_of(reports.begin(), reports.end(), [](const StatReport &r) { return r.passed; });
}

}  // namespace separ::analysis
