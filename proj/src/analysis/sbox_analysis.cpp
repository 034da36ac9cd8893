#include "separ/analysis/sbox_analysis.hpp"

#include <bit>
#include <cstdlib>
#include <ostream>

namespace separ::analysis {

Ddt compute_ddt(const NibbleTable &s) {
  Ddt d;
  for (unsigned a = 0; a < 16; ++a) {
    for (unsigned x = 0; x < 16; ++x) ++d.counts[a][(s[x] ^ s[x ^ a]) & 0xF];
  }
  return d;
}

Lat compute_lat(const NibbleTable &s) {
  Lat l;
  for (unsigned alpha = 0; alpha < 16; ++alpha) {
    for (unsigned beta = 0; beta < 16; ++beta) {
      int agree = 0;
      for (unsigned x = 0; x < 16; ++x) {
        const unsigned in = std::popcount(x & alpha) & 1u;
        const unsigned out = std::popcount(static_cast<unsigned>(s[x] & beta)) & 1u;
        if (in == out) ++agree;
      }
      l.biases[alpha][beta] = agree - 8;
    }
  }
  return l;
}

Rational max_diff_prob(const Ddt &d) {
  int best = 0;
  for (unsigned a = 1; a < 16; ++a) {
    for (unsigned b = 0; b < 16; ++b) best = std::max(best, d.counts[a][b]);
  }
  return Rational(static_cast<std::uint64_t>(best), 16);
}

Rational max_linear_prob(const Lat &l) {
  int best = 0;
  for (unsigned a = 0; a < 16; ++a) {
    for (unsigned b = 0; b < 16; ++b) {
      if (a == 0 && b == 0) continue;
      best = std::max(best, std::abs(l.biases[a][b]));
    }
  }
  return Rational(static_cast<std::uint64_t>(best), 16);
}

AnfProfile algebraic_degree(const NibbleTable &s) {
  AnfProfile p;
  for (unsigned i = 0; i < 4; ++i) {
    std::array<unsigned, 16> f{};
    for (unsigned x = 0; x < 16; ++x) f[x] = (s[x] >> i) & 1u;
    for (unsigned step = 1; step < 16; step <<= 1) {
      for (unsigned x = 0; x < 16; ++x) {
        if (x & step) f[x] ^= f[x ^ step];
      }
    }
    for (unsigned m = 0; m < 16; ++m) {
      if (f[m]) {
        p.monomials[i].push_back(m);
        p.component_degree[i] = std::max(p.component_degree[i], std::popcount(m));
      }
    }
    p.degree = std::max(p.degree, p.component_degree[i]);
  }
  return p;
}

unsigned evaluate_anf(const AnfProfile &anf, unsigned component, unsigned x) {
  unsigned v = 0;
  for (unsigned m : anf.monomials.at(component)) {
    if ((x & m) == m) v ^= 1u;
  }
  return v;
}

GoldenReport golden_check(const NibbleTable &s) {
  GoldenReport r;
  r.bijective = is_permutation(s);
  r.max_diff_prob = max_diff_prob(compute_ddt(s));
  r.max_linear_prob = max_linear_prob(compute_lat(s));
  r.degree = algebraic_degree(s).degree;
  const Rational quarter(1, 4);
  r.golden = r.bijective && r.max_diff_prob == quarter && r.max_linear_prob == quarter && r.degree >= 3;
  return r;
}

void write_csv(std::ostream &out, const Table16 &t) {
  for (const auto &row : t) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out << ',';
      out << row[j];
    }
    out << '\n';
  }
}

}  // namespace separ::analysis
