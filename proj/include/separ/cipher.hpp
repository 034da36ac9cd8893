#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "separ/key_schedule.hpp"
#include "separ/lfsr.hpp"
#include "separ/types.hpp"

namespace separ {

// The 144-bit secret machine: state1..state8 (zero-based here) plus the LFSR,
// and the number of words processed since initialization.
//
// A CipherState has a single owner. It can be moved between threads but must
// never be stepped concurrently.
struct CipherState {
  std::array<Word, kStateWords> state{};
  Word lfsr = 0;
  std::uint64_t t = 0;

  bool operator==(const CipherState &) const = default;
};

// Intermediates of one encryption step, exposed for whitebox checks.
// v[0] = V12, v[1] = V23, ..., v[6] = V78, v[7] = CT. Decryption recovers
// the same values, so matched steps produce identical traces.
struct StepTrace {
  std::array<Word, kBlocks> v{};
  Word lfsr_next = 0;
};

// Keyed engine. Holds the expanded key schedule and LFSR feedback, is
// immutable after construction and may be shared freely between threads.
class Separ {
 public:
  explicit Separ(const MasterKey &key, LfsrSpec lfsr = LfsrSpec::standard());

  CipherState initialize(const Nonce &nonce) const;

  Word encrypt_word(CipherState &st, Word pt) const;
  Word decrypt_word(CipherState &st, Word ct) const;

  Word encrypt_word(CipherState &st, Word pt, StepTrace &trace) const;
  Word decrypt_word(CipherState &st, Word ct, StepTrace &trace) const;

  // Initializes once, then processes big-endian word pairs in order. Throws
  // PaddingError when the data length is odd.
  std::vector<std::uint8_t> encrypt_message(const Nonce &nonce,
                                            std::span<const std::uint8_t> data) const;
  std::vector<std::uint8_t> decrypt_message(const Nonce &nonce,
                                            std::span<const std::uint8_t> data) const;

  // In-place word-stream variants on an existing state.
  void encrypt_words(CipherState &st, std::span<Word> words) const;
  void decrypt_words(CipherState &st, std::span<Word> words) const;

  const KeySchedule &schedule() const { return schedule_; }
  const LfsrSpec &lfsr_spec() const { return lfsr_; }

 private:
  void update_state(CipherState &st, const std::array<Word, kBlocks> &v, StepTrace &trace) const;

  KeySchedule schedule_;
  LfsrSpec lfsr_;
};

// Ciphertext of `words` zero plaintext words as big-endian octets.
std::vector<std::uint8_t> keystream(const Separ &cipher, const Nonce &nonce, std::size_t words);

// Big-endian packing helpers shared by the message layer and tools.
std::vector<Word> bytes_to_words(std::span<const std::uint8_t> data);
std::vector<std::uint8_t> words_to_bytes(std::span<const Word> words);

}  // namespace separ
