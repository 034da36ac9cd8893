#include "separ/analysis/rational.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

namespace separ::analysis {

namespace {

std::uint64_t parse_u64(std::string_view s) {
  std::uint64_t v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size() || s.empty()) {
    throw std::invalid_argument("bad number: " + std::string(s));
  }
  return v;
}

}  // namespace

Rational::Rational(std::uint64_t num, std::uint64_t den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  const std::uint64_t g = std::gcd(num, den);
  num_ = g ? num / g : 0;
  den_ = g ? den / g : 1;
}

Rational Rational::parse(std::string_view text) {
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    return Rational(parse_u64(text.substr(0, slash)), parse_u64(text.substr(slash + 1)));
  }
  if (text.starts_with("2^-")) {
    const std::uint64_t k = parse_u64(text.substr(3));
    if (k > 63) throw std::invalid_argument("exponent too large: " + std::string(text));
    return Rational(1, std::uint64_t{1} << k);
  }
  const auto dot = text.find('.');
  if (dot == std::string_view::npos) return Rational(parse_u64(text), 1);
  const std::string_view whole = text.substr(0, dot);
  const std::string_view frac = text.substr(dot + 1);
  if (frac.empty() || frac.size() > 18) throw std::invalid_argument("bad decimal: " + std::string(text));
  std::uint64_t den = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
  const std::uint64_t w = whole.empty() ? 0 : parse_u64(whole);
  return Rational(w * den + parse_u64(frac), den);
}

std::string Rational::to_string() const { return std::to_string(num_) + "/" + std::to_string(den_); }

Rational operator*(const Rational &a, const Rational &b) {
  // Cross-reduce before multiplying to keep intermediates small.
  const std::uint64_t g1 = std::gcd(a.num_, b.den_);
  const std::uint64_t g2 = std::gcd(b.num_, a.den_);
  const std::uint64_t n1 = g1 ? a.num_ / g1 : 0, d2 = g1 ? b.den_ / g1 : b.den_;
  const std::uint64_t n2 = g2 ? b.num_ / g2 : 0, d1 = g2 ? a.den_ / g2 : a.den_;
  std::uint64_t num = 0, den = 0;
  if (__builtin_mul_overflow(n1, n2, &num) || __builtin_mul_overflow(d1, d2, &den)) {
    throw std::overflow_error("rational product overflow");
  }
  return Rational(num, den);
}

std::strong_ordering operator<=>(const Rational &a, const Rational &b) {
  __extension__ typedef unsigned __int128 u128;
  const u128 lhs = static_cast<u128>(a.num_) * b.den_;
  const u128 rhs = static_cast<u128>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace separ::analysis
