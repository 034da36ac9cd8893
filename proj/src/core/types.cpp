#include "separ/types.hpp"

#include <algorithm>

#include "separ/errors.hpp"
#include "separ/hex.hpp"

namespace separ {

namespace {

void require_hex_digits(std::string_view hex, std::size_t digits, const char *what) {
  const std::string stripped = strip_hex(hex);
  if (stripped.size() != digits) {
    throw LengthError(std::string(what) + " must be " + std::to_string(digits) +
                      " hex digits, got " + std::to_string(stripped.size()));
  }
}

}  // namespace

MasterKey MasterKey::from_bytes(std::span<const std::uint8_t> bytes) {
  if (bytes.size() != kKeyBytes) {
    throw LengthError("master key must be 32 octets, got " + std::to_string(bytes.size()));
  }
  std::array<std::uint8_t, kKeyBytes> raw{};
  std::copy(bytes.begin(), bytes.end(), raw.begin());
  return MasterKey(raw);
}

MasterKey MasterKey::from_hex(std::string_view hex) {
  require_hex_digits(hex, 2 * kKeyBytes, "key");
  return from_bytes(separ::from_hex(hex));
}

std::string MasterKey::to_hex() const { return separ::to_hex(bytes_); }

Nonce Nonce::from_bytes(std::span<const std::uint8_t> bytes) {
  if (bytes.size() != 2 * kNonceWords) {
    throw LengthError("IV must be 16 octets, got " + std::to_string(bytes.size()));
  }
  Nonce n;
  for (std::size_t i = 0; i < kNonceWords; ++i) {
    n.words[i] = static_cast<Word>((bytes[2 * i] << 8) | bytes[2 * i + 1]);
  }
  return n;
}

Nonce Nonce::from_hex(std::string_view hex) {
  require_hex_digits(hex, 4 * kNonceWords, "IV");
  return from_bytes(separ::from_hex(hex));
}

std::array<std::uint8_t, 2 * kNonceWords> Nonce::to_bytes() const {
  std::array<std::uint8_t, 2 * kNonceWords> out{};
  for (std::size_t i = 0; i < kNonceWords; ++i) {
    out[2 * i] = static_cast<std::uint8_t>(words[i] >> 8);
    out[2 * i + 1] = static_cast<std::uint8_t>(words[i] & 0xFF);
  }
  return out;
}

std::string Nonce::to_hex() const { return separ::to_hex(to_bytes()); }

}  // namespace separ
