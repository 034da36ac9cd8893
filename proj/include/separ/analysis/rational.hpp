#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace separ::analysis {

// Exact nonnegative fraction, always stored in lowest terms.
class Rational {
 public:
  constexpr Rational() = default;
  // Throws std::invalid_argument on a zero denominator.
  Rational(std::uint64_t num, std::uint64_t den);

  // "a/b", "2^-k", or a decimal such as "0.25" (at most 18 fractional digits).
  static Rational parse(std::string_view text);

  std::uint64_t num() const { return num_; }
  std::uint64_t den() const { return den_; }
  double value() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string to_string() const;

  // Throws std::overflow_error if the reduced result does not fit.
  friend Rational operator*(const Rational &a, const Rational &b);
  friend std::strong_ordering operator<=>(const Rational &a, const Rational &b);
  friend bool operator==(const Rational &a, const Rational &b) = default;

 private:
  std::uint64_t num_ = 0;
  std::uint64_t den_ = 1;
};

}  // namespace separ::analysis
