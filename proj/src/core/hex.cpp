#include "separ/hex.hpp"

#include <cctype>

#include "separ/errors.hpp"

namespace separ {

namespace {

int digit_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  return -1;
}

}  // namespace

std::string to_hex(std::span<const std::uint8_t> bytes) {
  static constexpr char kDigits[] = "0123456789ABCDEF";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (std::uint8_t b : bytes) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0xF]);
  }
  return out;
}

std::string strip_hex(std::string_view hex) {
  std::string out;
  out.reserve(hex.size());
  for (char c : hex) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    out.push_back(c);
  }
  if (out.size() >= 2 && out[0] == '0' && (out[1] == 'x' || out[1] == 'X')) out.erase(0, 2);
  return out;
}

std::vector<std::uint8_t> from_hex(std::string_view hex) {
  const std::string digits = strip_hex(hex);
  if (digits.size() % 2 != 0) throw HexError("odd number of hex digits");
  std::vector<std::uint8_t> out(digits.size() / 2);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const int hi = digit_value(digits[2 * i]);
    const int lo = digit_value(digits[2 * i + 1]);
    if (hi < 0 || lo < 0) throw HexError("invalid hex character");
    out[i] = static_cast<std::uint8_t>((hi << 4) | lo);
  }
  return out;
}

}  // namespace separ
