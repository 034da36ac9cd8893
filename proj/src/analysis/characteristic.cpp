#include "separ/analysis/characteristic.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "separ/analysis/differential.hpp"
#include "separ/analysis/sbox_analysis.hpp"
#include "separ/block.hpp"

namespace separ::analysis {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kEps = 1e-9;
constexpr std::size_t kDomain = 1u << 16;

struct Transition {
  std::uint8_t out;
  std::uint8_t count;
  double weight;
};

// Per S-box position (0 = most-significant nibble) and input nibble, the
// possible output nibbles in increasing weight.
struct TransitionTable {
  std::array<std::array<std::vector<Transition>, 16>, 4> lists;
  std::array<std::array<double, 16>, 4> min_weight{};

  TransitionTable() {
    for (std::size_t q = 0; q < 4; ++q) {
      const Ddt ddt = compute_ddt(kSboxTables[q]);
      for (unsigned a = 0; a < 16; ++a) {
        auto &l = lists[q][a];
        for (unsigned b = 0; b < 16; ++b) {
          const int c = ddt.counts[a][b];
          if (c > 0) {
            l.push_back({static_cast<std::uint8_t>(b), static_cast<std::uint8_t>(c),
                         std::log2(16.0 / c)});
          }
        }
        std::stable_sort(l.begin(), l.end(),
                         [](const Transition &x, const Transition &y) { return x.weight < y.weight; });
        min_weight[q][a] = l.front().weight;
      }
    }
  }
};

const TransitionTable &transitions() {
  static const TransitionTable t;
  return t;
}

unsigned nib(Word d, std::size_t q) { return (d >> (12 - 4 * q)) & 0xFu; }

// Calls visit(out_difference, weight, counts) for every S-layer output of d
// whose weight plus tail(next) can stay within limit.
template <typename Tail, typename Visit>
void for_each_output(Word d, double limit, const Tail &tail, const Visit &visit) {
  const auto &t = transitions();
  const auto &l0 = t.lists[0][nib(d, 0)];
  const auto &l1 = t.lists[1][nib(d, 1)];
  const auto &l2 = t.lists[2][nib(d, 2)];
  const auto &l3 = t.lists[3][nib(d, 3)];
  const double m1 = t.min_weight[1][nib(d, 1)], m2 = t.min_weight[2][nib(d, 2)],
               m3 = t.min_weight[3][nib(d, 3)];
  for (const auto &a : l0) {
    const double w0 = a.weight;
    if (w0 + m1 + m2 + m3 > limit + kEps) break;
    for (const auto &b : l1) {
      const double w1 = w0 + b.weight;
      if (w1 + m2 + m3 > limit + kEps) break;
      for (const auto &c : l2) {
        const double w2 = w1 + c.weight;
        if (w2 + m3 > limit + kEps) break;
        for (const auto &e : l3) {
          const double w = w2 + e.weight;
          if (w > limit + kEps) break;
          const Word o = static_cast<Word>((a.out << 12) | (b.out << 8) | (c.out << 4) | e.out);
          const Word next = linear_layer(o);
          const double rest = tail(next);
          if (w + rest > limit + kEps) continue;
          visit(next, w, std::array<std::uint8_t, 4>{a.count, b.count, c.count, e.count});
        }
      }
    }
  }
}

double best_through(Word d, const std::vector<double> &prev, double max_weight) {
  double best = kInf;
  auto tail = [&](Word next) { return prev[next]; };
  for_each_output(d, max_weight, tail, [&](Word next, double w, const auto &) {
    best = std::min(best, w + prev[next]);
  });
  return best <= max_weight + kEps ? best : kInf;
}

std::vector<double> end_table(std::optional<Word> output) {
  std::vector<double> g(kDomain, output ? kInf : 0.0);
  if (output) g[*output] = 0.0;
  g[0] = kInf;
  return g;
}

void validate(const CharacteristicQuery &q) {
  if (q.iterations < 1 || q.iterations > kMaxIterations) {
    throw std::out_of_range("iterations must be in 1..5");
  }
  if (q.p_min.num() == 0 || q.p_min >= Rational(1, 1)) {
    throw std::invalid_argument("p_min must lie in (0, 1)");
  }
  if (q.p_min < Rational(1, std::uint64_t{1} << 63)) {
    throw std::invalid_argument("p_min below 2^-63 is not supported");
  }
  if ((q.input && *q.input == 0) || (q.output && *q.output == 0)) {
    throw std::invalid_argument("fixed differences must be nonzero");
  }
}

struct Searcher {
  const CharacteristicQuery &q;
  const BoundTables &g;
  double max_weight;
  std::vector<Word> path;
  std::vector<std::array<std::uint8_t, 4>> counts;
  std::vector<DiffCharacteristic> found;
  const std::atomic<bool> &abort;

  void dfs(int r, double acc) {
    if (abort.load(std::memory_order_relaxed)) return;
    const int remaining = q.iterations - r - 1;
    const auto &tail_table = g[static_cast<std::size_t>(remaining)];
    auto tail = [&](Word next) { return acc + tail_table[next]; };
    for_each_output(path.back(), max_weight, tail, [&](Word next, double w, const auto &cs) {
      if (acc + w + tail_table[next] > max_weight + kEps) return;
      path.push_back(next);
      counts.push_back(cs);
      if (remaining == 0) {
        record();
      } else {
        dfs(r + 1, acc + w);
      }
      path.pop_back();
      counts.pop_back();
    });
  }

  void record() {
    Rational p(1, 1);
    for (const auto &cs : counts) {
      for (std::uint8_t c : cs) {
        if (c != 16) p = p * Rational(c, 16);
      }
    }
    if (p < q.p_min) return;
    found.push_back({q.iterations, path, p});
  }
};

bool trail_less(const DiffCharacteristic &x, const DiffCharacteristic &y) {
  if (x.probability != y.probability) return x.probability > y.probability;
  return x.differences < y.differences;
}

template <bool Parallel>
BoundTables bounds_impl(int rounds, std::optional<Word> output, double max_weight) {
  BoundTables g;
  g.reserve(static_cast<std::size_t>(rounds) + 1);
  g.push_back(end_table(output));
  for (int r = 1; r <= rounds; ++r) {
    const auto &prev = g.back();
    std::vector<double> cur(kDomain, kInf);
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(kDomain);
    if constexpr (Parallel) {
#pragma omp parallel for schedule(dynamic, 256)
      for (std::ptrdiff_t d = 1; d < n; ++d) {
        cur[static_cast<std::size_t>(d)] = best_through(static_cast<Word>(d), prev, max_weight);
      }
    } else {
      for (std::ptrdiff_t d = 1; d < n; ++d) {
        cur[static_cast<std::size_t>(d)] = best_through(static_cast<Word>(d), prev, max_weight);
      }
    }
    g.push_back(std::move(cur));
  }
  return g;
}

}  // namespace

BoundTables remaining_weight_bounds_serial(int rounds, std::optional<Word> output, double max_weight) {
  return bounds_impl<false>(rounds, output, max_weight);
}

BoundTables remaining_weight_bounds_parallel(int rounds, std::optional<Word> output, double max_weight) {
  return bounds_impl<true>(rounds, output, max_weight);
}

std::vector<DiffCharacteristic> characteristic_search(const CharacteristicQuery &q) {
  validate(q);
  const double max_weight = -std::log2(q.p_min.value());
  // Only tails of up to iterations-1 bodies are consulted during the search.
  const BoundTables g = q.parallel ? remaining_weight_bounds_parallel(q.iterations - 1, q.output, max_weight)
                                   : remaining_weight_bounds_serial(q.iterations - 1, q.output, max_weight);

  std::vector<Word> starts;
  if (q.input) {
    starts.push_back(*q.input);
  } else {
    starts.resize(kDomain - 1);
    for (std::size_t d = 1; d < kDomain; ++d) starts[d - 1] = static_cast<Word>(d);
  }

  std::vector<std::vector<DiffCharacteristic>> per_start(starts.size());
  std::atomic<bool> abort{false};
  std::atomic<std::size_t> total{0};
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(starts.size());

  auto run = [&](std::ptrdiff_t i) {
    Searcher s{q, g, max_weight, {starts[static_cast<std::size_t>(i)]}, {}, {}, abort};
    s.dfs(0, 0.0);
    if (total.fetch_add(s.found.size()) + s.found.size() > q.max_results) abort = true;
    per_start[static_cast<std::size_t>(i)] = std::move(s.found);
  };
  if (q.parallel) {
#pragma omp parallel for schedule(dynamic, 16)
    for (std::ptrdiff_t i = 0; i < n; ++i) run(i);
  } else {
    for (std::ptrdiff_t i = 0; i < n && !abort; ++i) run(i);
  }
  if (abort) {
    throw std::length_error("more than " + std::to_string(q.max_results) +
                            " characteristics qualify; raise p_min or max_results");
  }

  std::vector<DiffCharacteristic> out;
  out.reserve(total.load());
  for (auto &v : per_start) {
    for (auto &c : v) out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), trail_less);
  return out;
}

std::vector<DiffCharacteristic> characteristic_search(int iterations, Rational p_min) {
  CharacteristicQuery q;
  q.iterations = iterations;
  q.p_min = p_min;
  return characteristic_search(q);
}

Rational trail_probability(std::span<const Word> differences) {
  if (differences.size() < 2) throw std::invalid_argument("a trail needs at least two differences");
  static const std::array<Ddt, 4> ddts = {compute_ddt(kSboxTables[0]), compute_ddt(kSboxTables[1]),
                                          compute_ddt(kSboxTables[2]), compute_ddt(kSboxTables[3])};
  Rational p(1, 1);
  for (std::size_t r = 0; r + 1 < differences.size(); ++r) {
    const Word in = differences[r];
    const Word out = inv_linear_layer(differences[r + 1]);
    for (std::size_t q = 0; q < 4; ++q) {
      const int c = ddts[q].counts[nib(in, q)][nib(out, q)];
      if (c == 0) return Rational(0, 1);
      if (c != 16) p = p * Rational(static_cast<std::uint64_t>(c), 16);
    }
  }
  return p;
}

std::string format_characteristic(const DiffCharacteristic &c, bool with_path) {
  char buf[32];
  std::string s;
  for (std::size_t i = 0; i < c.differences.size(); ++i) {
    if (!with_path && i != 0 && i + 1 != c.differences.size()) continue;
    if (!s.empty()) s += " -> ";
    std::snprintf(buf, sizeof buf, "0x%04X", c.differences[i]);
    s += buf;
  }
  return s + " p=" + c.probability.to_string();
}

}  // namespace separ::analysis
