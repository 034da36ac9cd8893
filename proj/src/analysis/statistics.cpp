#include "separ/analysis/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <stdexcept>
#include <unordered_map>

namespace separ::analysis {

Histogram histogram(std::span<const std::uint8_t> data) {
  Histogram h{};
  for (std::uint8_t b : data) ++h[b];
  return h;
}

double entropy(std::span<const std::uint8_t> data) {
  if (data.empty()) throw std::invalid_argument("entropy of an empty sequence");
  const Histogram h = histogram(data);
  const double n = static_cast<double>(data.size());
  double e = 0.0;
  for (std::uint64_t c : h) {
    if (c == 0) continue;
    const double p = static_cast<double>(c) / n;
    e -= p * std::log2(p);
  }
  return e;
}

namespace {

struct Prefix {
  std::vector<std::uint64_t> sum, sq;

  explicit Prefix(std::span<const std::uint8_t> d) : sum(d.size() + 1, 0), sq(d.size() + 1, 0) {
    for (std::size_t i = 0; i < d.size(); ++i) {
      sum[i + 1] = sum[i] + d[i];
      sq[i + 1] = sq[i] + std::uint64_t{d[i]} * d[i];
    }
  }
};

std::optional<double> lag_correlation(std::span<const std::uint8_t> d, const Prefix &p, std::size_t k) {
  const std::size_t m = d.size() - k;
  std::uint64_t cross = 0;
  const std::uint8_t *a = d.data();
  const std::uint8_t *b = d.data() + k;
  for (std::size_t i = 0; i < m; ++i) cross += std::uint32_t{a[i]} * b[i];
  const double n = static_cast<double>(m);
  const double sa = static_cast<double>(p.sum[m]);
  const double sb = static_cast<double>(p.sum[d.size()] - p.sum[k]);
  const double qa = static_cast<double>(p.sq[m]);
  const double qb = static_cast<double>(p.sq[d.size()] - p.sq[k]);
  const double va = n * qa - sa * sa;
  const double vb = n * qb - sb * sb;
  if (va <= 0.0 || vb <= 0.0) return std::nullopt;
  return (n * static_cast<double>(cross) - sa * sb) / std::sqrt(va * vb);
}

void check_lag(std::span<const std::uint8_t> d, std::size_t max_lag) {
  if (max_lag >= d.size()) throw std::invalid_argument("max_lag must be below the sequence length");
}

}  // namespace

Correlogram autocorrelation_serial(std::span<const std::uint8_t> data, std::size_t max_lag) {
  check_lag(data, max_lag);
  const Prefix p(data);
  Correlogram out(max_lag + 1);
  out[0] = 1.0;
  for (std::size_t k = 1; k <= max_lag; ++k) out[k] = lag_correlation(data, p, k);
  return out;
}

Correlogram autocorrelation_parallel(std::span<const std::uint8_t> data, std::size_t max_lag) {
  check_lag(data, max_lag);
  const Prefix p(data);
  Correlogram out(max_lag + 1);
  out[0] = 1.0;
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(max_lag);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t k = 1; k <= n; ++k) {
    out[static_cast<std::size_t>(k)] = lag_correlation(data, p, static_cast<std::size_t>(k));
  }
  return out;
}

namespace {

// Smallest p such that d[i] == d[i + p] for all valid i.
std::size_t smallest_period(std::span<const std::uint8_t> d) {
  std::vector<std::size_t> fail(d.size(), 0);
  for (std::size_t i = 1, k = 0; i < d.size(); ++i) {
    while (k > 0 && d[i] != d[k]) k = fail[k - 1];
    if (d[i] == d[k]) ++k;
    fail[i] = k;
  }
  return d.size() - fail.back();
}

constexpr std::uint64_t kMod = (std::uint64_t{1} << 61) - 1;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  __extension__ typedef unsigned __int128 u128;
  const u128 r = static_cast<u128>(a) * b;
  std::uint64_t lo = static_cast<std::uint64_t>(r & kMod) + static_cast<std::uint64_t>(r >> 61);
  return lo >= kMod ? lo - kMod : lo;
}

// Positions of two equal substrings of length len, if any.
std::optional<std::pair<std::size_t, std::size_t>> find_repeat(std::span<const std::uint8_t> d, std::size_t len) {
  constexpr std::uint64_t base = 1000003;
  std::uint64_t pw = 1;
  for (std::size_t i = 0; i < len; ++i) pw = mulmod(pw, base);
  std::unordered_map<std::uint64_t, std::size_t> seen;
  seen.reserve(d.size());
  std::uint64_t h = 0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    h = mulmod(h, base) + d[i] + 1;
    if (h >= kMod) h -= kMod;
    if (i >= len) {
      h = (h + kMod - mulmod(pw, d[i - len] + 1u)) % kMod;
    }
    if (i + 1 < len) continue;
    const std::size_t start = i + 1 - len;
    const auto [it, fresh] = seen.emplace(h, start);
    if (!fresh && std::memcmp(d.data() + it->second, d.data() + start, len) == 0) {
      return std::pair{it->second, start};
    }
  }
  return std::nullopt;
}

}  // namespace

PeriodicityReport periodicity(std::span<const std::uint8_t> data, std::size_t min_len) {
  if (min_len < 2) throw std::invalid_argument("min_len must be at least 2");
  PeriodicityReport r;
  if (data.empty()) return r;

  const std::size_t p = smallest_period(data);
  // Any multiple of the smallest period is a period too.
  const std::size_t q = p * ((min_len + p - 1) / p);
  if (2 * q <= data.size()) r.period = q;

  std::size_t lo = 0, hi = data.size() - 1;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo + 1) / 2;
    if (auto hit = find_repeat(data, mid)) {
      lo = mid;
      r.repeat_first = hit->first;
      r.repeat_second = hit->second;
    } else {
      hi = mid - 1;
    }
  }
  r.longest_repeat = lo;

  std::size_t run = 0;
  for (std::size_t i = 0; i < data.size(); ++i) {
    run = (i > 0 && data[i] == data[i - 1]) ? run + 1 : 1;
    if (run > r.longest_run) {
      r.longest_run = run;
      r.run_value = data[i];
    }
  }
  return r;
}

}  // namespace separ::analysis
