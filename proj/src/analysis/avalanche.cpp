#include "separ/analysis/avalanche.hpp"

#include <bit>
#include <cmath>
#include <random>
#include <stdexcept>

#include "separ/hex.hpp"

namespace separ::analysis {

std::size_t hamming_distance(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b) {
  if (a.size() != b.size()) throw std::invalid_argument("hamming distance of unequal lengths");
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += static_cast<std::size_t>(std::popcount(unsigned(a[i] ^ b[i])));
  return d;
}

namespace {

void flip_bit(std::span<std::uint8_t> data, std::size_t bit) {
  if (bit >= data.size() * 8) throw std::out_of_range("flip position " + std::to_string(bit) + " out of range");
  data[bit / 8] ^= static_cast<std::uint8_t>(0x80u >> (bit % 8));
}

std::size_t target_bits(FlipTarget t, std::size_t pt_octets) {
  switch (t) {
    case FlipTarget::Plaintext: return pt_octets * 8;
    case FlipTarget::Key: return kKeyBytes * 8;
    case FlipTarget::Iv: return kNonceWords * 16;
    case FlipTarget::None: return 0;
  }
  return 0;
}


std::vector<std::uint8_t> flipped_ct(const MasterKey &key, const Nonce &nonce, std::span<const std::uint8_t> pt,
                                     FlipSpec flip, const LfsrSpec &lfsr) {
  MasterKey k = key;
  Nonce n = nonce;
  std::vector<std::uint8_t> p(pt.begin(), pt.end());
  switch (flip.target) {
    case FlipTarget::None:
      break;
    case FlipTarget::Plaintext:
      flip_bit(p, flip.bit);
      break;
    case FlipTarget::Key: {
      auto bytes = key.bytes();
      flip_bit(bytes, flip.bit);
      k = MasterKey(bytes);
      break;
    }
    case FlipTarget::Iv: {
      auto bytes = nonce.to_bytes();
      flip_bit(bytes, flip.bit);
      n = Nonce::from_bytes(bytes);
      break;
    }
  }
  return Separ(k, lfsr).encrypt_message(n, p);
}

}  // namespace

AvalancheReport avalanche(const MasterKey &key, const Nonce &nonce, std::span<const std::uint8_t> pt,
                          FlipSpec flip, const LfsrSpec &lfsr) {
  if (flip.target != FlipTarget::None && flip.bit >= target_bits(flip.target, pt.size())) {
    throw std::out_of_range("flip position " + std::to_string(flip.bit) + " out of range");
  }
  const auto base = Separ(key, lfsr).encrypt_message(nonce, pt);
  const auto other = flipped_ct(key, nonce, pt, flip, lfsr);
  return {hamming_distance(base, other), base.size() * 8, to_hex(base), to_hex(other)};
}

AvalancheSummary avalanche_trials(const MasterKey &key, const Nonce &nonce, std::span<const std::uint8_t> pt,
                                  FlipTarget target, std::size_t trials, std::uint64_t seed, std::size_t window,
                                  const LfsrSpec &lfsr) {
  const std::size_t span_bits = target_bits(target, pt.size());
  if (span_bits == 0) throw std::invalid_argument("avalanche trials need a flip target with at least one bit");
  if (window == 0 || window > span_bits) window = span_bits;
  const auto base = Separ(key, lfsr).encrypt_message(nonce, pt);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pos(0, window - 1);

  AvalancheSummary s;
  s.trials = trials;
  s.bits = base.size() * 8;
  s.min = s.bits;
  double sum = 0.0, sq = 0.0;
  for (std::size_t i = 0; i < trials; ++i) {
    const std::size_t d = hamming_distance(base, flipped_ct(key, nonce, pt, {target, pos(rng)}, lfsr));
    sum += static_cast<double>(d);
    sq += static_cast<double>(d) * static_cast<double>(d);
    s.min = std::min(s.min, d);
    s.max = std::max(s.max, d);
  }
  if (trials > 0) {
    s.mean = sum / static_cast<double>(trials);
    s.stddev = std::sqrt(std::max(0.0, sq / static_cast<double>(trials) - s.mean * s.mean));
  } else {
    s.min = 0;
  }
  return s;
}

}  // namespace separ::analysis
