#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace separ {

// The cipher's universal unit: plaintext, ciphertext, state and subkeys are
// all 16-bit words, and all arithmetic on them wraps modulo 2^16.
using Word = std::uint16_t;

inline constexpr std::size_t kKeyBytes = 32;
inline constexpr std::size_t kNonceWords = 8;
inline constexpr std::size_t kStateWords = 8;
inline constexpr std::size_t kBlocks = 8;

// 256-bit master key held as 32 octets, most-significant octet first.
class MasterKey {
 public:
  MasterKey() = default;
  explicit MasterKey(const std::array<std::uint8_t, kKeyBytes> &bytes) : bytes_(bytes) {}

  // Throws LengthError unless exactly 32 octets are supplied.
  static MasterKey from_bytes(std::span<const std::uint8_t> bytes);
  // Exactly 64 hex digits; LengthError on a wrong digit count, HexError on bad characters.
  static MasterKey from_hex(std::string_view hex);

  const std::array<std::uint8_t, kKeyBytes> &bytes() const { return bytes_; }
  std::string to_hex() const;

  bool operator==(const MasterKey &) const = default;

 private:
  std::array<std::uint8_t, kKeyBytes> bytes_{};
};

// 128-bit initialization vector as eight words, NONCE1 first.
struct Nonce {
  std::array<Word, kNonceWords> words{};

  static Nonce from_bytes(std::span<const std::uint8_t> bytes);
  // Exactly 32 hex digits.
  static Nonce from_hex(std::string_view hex);
  std::array<std::uint8_t, 2 * kNonceWords> to_bytes() const;
  std::string to_hex() const;

  bool operator==(const Nonce &) const = default;
};

}  // namespace separ
