#pragma once

#include <array>
#include <iosfwd>
#include <vector>

#include "separ/analysis/rational.hpp"
#include "separ/sbox.hpp"

namespace separ::analysis {

using Table16 = std::array<std::array<int, 16>, 16>;

// counts[a][b] = #{x : S(x) ^ S(x ^ a) = b}; rows are input differences.
struct Ddt {
  Table16 counts{};
};

// biases[alpha][beta] = #{x : <x,alpha> = <S(x),beta>} - 8; rows are input masks.
struct Lat {
  Table16 biases{};
};

// Algebraic normal form of each output bit. Component i is output bit i
// (bit 0 = least significant). A monomial is a 4-bit mask over the input bits
// x0..x3; mask 0 is the constant term.
struct AnfProfile {
  std::array<std::vector<unsigned>, 4> monomials;
  std::array<int, 4> component_degree{};
  int degree = 0;
};

struct GoldenReport {
  bool bijective = false;
  Rational max_diff_prob;
  Rational max_linear_prob;
  int degree = 0;
  bool golden = false;
};

Ddt compute_ddt(const NibbleTable &s);
Lat compute_lat(const NibbleTable &s);

// Largest entry off the zero input difference, over 16.
Rational max_diff_prob(const Ddt &d);
// Largest |bias| over nonzero mask pairs, over 16.
Rational max_linear_prob(const Lat &l);

// Binary Moebius transform of each component.
AnfProfile algebraic_degree(const NibbleTable &s);
// Evaluates component i of the ANF at x.
unsigned evaluate_anf(const AnfProfile &anf, unsigned component, unsigned x);

// Bijective, differential and linear probability 1/4, degree >= 3.
GoldenReport golden_check(const NibbleTable &s);

void write_csv(std::ostream &out, const Table16 &t);

}  // namespace separ::analysis
