#include "separ/analysis/differential.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "separ/block.hpp"

namespace separ::analysis {

namespace {

constexpr std::size_t kDomain = 1u << 16;

void check_iterations(int iterations) {
  if (iterations < 1 || iterations > kMaxIterations) {
    throw std::out_of_range("iterations must be in 1..5");
  }
}

void check_table(std::span<const Word> table) {
  if (table.size() != kDomain) throw std::invalid_argument("table must have 65536 entries");
}

DiffMax row_max(std::span<const Word> table, Word a, std::vector<std::uint32_t> &hist) {
  std::fill(hist.begin(), hist.end(), 0u);
  for (std::size_t x = 0; x < kDomain; ++x) ++hist[table[x] ^ table[x ^ a]];
  DiffMax best{0, a, 0};
  for (std::size_t b = 0; b < kDomain; ++b) {
    if (hist[b] > best.count) best = {hist[b], a, static_cast<Word>(b)};
  }
  return best;
}

bool better(const DiffMax &x, const DiffMax &y) {
  if (x.count != y.count) return x.count > y.count;
  if (x.a != y.a) return x.a < y.a;
  return x.b < y.b;
}

std::vector<Word> all_inputs(std::span<const Word> inputs) {
  if (!inputs.empty()) {
    for (Word a : inputs) {
      if (a == 0) throw std::invalid_argument("input difference must be nonzero");
    }
    return {inputs.begin(), inputs.end()};
  }
  std::vector<Word> v(kDomain - 1);
  std::iota(v.begin(), v.end(), Word{1});
  return v;
}

}  // namespace

Word b16_chain(Word x, const SubkeySet &sk, int iterations) {
  check_iterations(iterations);
  for (int j = 0; j < iterations; ++j) x = b16_round(x, sk.k[static_cast<std::size_t>(j)]);
  return x;
}

std::vector<Word> b16_chain_table(const SubkeySet &sk, int iterations) {
  check_iterations(iterations);
  std::vector<Word> t(kDomain);
  for (std::size_t x = 0; x < kDomain; ++x) t[x] = b16_chain(static_cast<Word>(x), sk, iterations);
  return t;
}

std::uint32_t diff_count(const SubkeySet &sk, Word a, Word b, int iterations) {
  if (a == 0) throw std::invalid_argument("input difference must be nonzero");
  const auto t = b16_chain_table(sk, iterations);
  std::uint32_t n = 0;
  for (std::size_t x = 0; x < kDomain; ++x) n += (t[x] ^ t[x ^ a]) == b;
  return n;
}

std::vector<std::uint32_t> diff_row(std::span<const Word> table, Word a) {
  check_table(table);
  std::vector<std::uint32_t> hist(kDomain);
  for (std::size_t x = 0; x < kDomain; ++x) ++hist[table[x] ^ table[x ^ a]];
  return hist;
}

DiffMax diff_max_serial(std::span<const Word> table, std::span<const Word> inputs) {
  check_table(table);
  const auto as = all_inputs(inputs);
  std::vector<std::uint32_t> hist(kDomain);
  DiffMax best;
  bool any = false;
  for (Word a : as) {
    const DiffMax r = row_max(table, a, hist);
    if (!any || better(r, best)) best = r;
    any = true;
  }
  return best;
}

DiffMax diff_max_parallel(std::span<const Word> table, std::span<const Word> inputs) {
  check_table(table);
  const auto as = all_inputs(inputs);
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(as.size());
  DiffMax best;
  bool any = false;
#pragma omp parallel
  {
    std::vector<std::uint32_t> hist(kDomain);
    DiffMax local;
    bool local_any = false;
#pragma omp for schedule(dynamic, 64) nowait
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      const DiffMax r = row_max(table, as[static_cast<std::size_t>(i)], hist);
      if (!local_any || better(r, local)) local = r;
      local_any = true;
    }
#pragma omp critical
    {
      if (local_any && (!any || better(local, best))) {
        best = local;
        any = true;
      }
    }
  }
  return best;
}

}  // namespace separ::analysis
