#include "separ/cipher.hpp"

#include "separ/block.hpp"
#include "separ/errors.hpp"
#include "separ/primitives.hpp"

namespace separ {

namespace {
constexpr Word kLfsrForceBit = 0x0100;
constexpr int kInitRounds = 4;
}  // namespace

Separ::Separ(const MasterKey &key, LfsrSpec lfsr) : schedule_(key), lfsr_(std::move(lfsr)) {}

CipherState Separ::initialize(const Nonce &nonce) const {
  CipherState st;
  auto &s = st.state;
  s = nonce.words;
  Word out = 0;
  for (int round = 0; round < kInitRounds; ++round) {
    // Mixing is XOR throughout initialization.
    const Word v12 = enc_block(static_cast<Word>(s[0] ^ s[2] ^ s[4] ^ s[6]), schedule_.block(1));
    const Word v23 = enc_block(static_cast<Word>(v12 ^ s[1]), schedule_.block(2));
    const Word v34 = enc_block(static_cast<Word>(v23 ^ s[2]), schedule_.block(3));
    const Word v45 = enc_block(static_cast<Word>(v34 ^ s[3]), schedule_.block(4));
    const Word v56 = enc_block(static_cast<Word>(v45 ^ s[4]), schedule_.block(5));
    const Word v67 = enc_block(static_cast<Word>(v56 ^ s[5]), schedule_.block(6));
    const Word v78 = enc_block(static_cast<Word>(v67 ^ s[6]), schedule_.block(7));
    out = enc_block(static_cast<Word>(v78 ^ s[7]), schedule_.block(8));
    s[0] ^= out;
    s[1] ^= v12;
    s[2] ^= v23;
    s[3] ^= v34;
    s[4] ^= v45;
    s[5] ^= v56;
    s[6] ^= v67;
    s[7] ^= v78;
  }
  st.lfsr = static_cast<Word>(out | kLfsrForceBit);
  st.t = 0;
  return st;
}

// Every right-hand state reference is the pre-update value, except that
// state3 reads the new state4 and state5 reads the new LFSR.
void Separ::update_state(CipherState &st, const std::array<Word, kBlocks> &v,
                         StepTrace &trace) const {
  const Word v12 = v[0], v23 = v[1], v34 = v[2], v45 = v[3], v56 = v[4], v67 = v[5], v78 = v[6];
  const auto old = st.state;
  const Word lfsr_next = lfsr_clock(st.lfsr, lfsr_);
  auto &s = st.state;
  s[3] = modadd(modadd(v12, v45), old[7]);
  s[1] = modadd(modadd(v12, v56), old[5]);
  s[2] = modadd(modadd(v23, s[3]), old[0]);
  s[4] = modadd(v23, lfsr_next);
  s[5] = modadd(modadd(v12, v45), old[6]);
  s[6] = modadd(v23, v67);
  s[7] = v45;
  s[0] = modadd(modadd(modadd(v34, v23), v78), old[4]);
  st.lfsr = lfsr_next;
  ++st.t;
  trace.lfsr_next = lfsr_next;
}

Word Separ::encrypt_word(CipherState &st, Word pt, StepTrace &trace) const {
  auto &v = trace.v;
  Word x = pt;
  for (std::size_t i = 0; i < kBlocks; ++i) {
    x = enc_block(modadd(x, st.state[i]), schedule_.block(static_cast<int>(i + 1)));
    v[i] = x;
  }
  update_state(st, v, trace);
  return v[7];
}

Word Separ::decrypt_word(CipherState &st, Word ct, StepTrace &trace) const {
  auto &v = trace.v;
  v[7] = ct;
  Word x = ct;
  for (std::size_t i = kBlocks; i-- > 0;) {
    x = modsub(dec_block(x, schedule_.block(static_cast<int>(i + 1))), st.state[i]);
    if (i > 0) v[i - 1] = x;
  }
  update_state(st, v, trace);
  return x;
}

Word Separ::encrypt_word(CipherState &st, Word pt) const {
  StepTrace trace;
  return encrypt_word(st, pt, trace);
}

Word Separ::decrypt_word(CipherState &st, Word ct) const {
  StepTrace trace;
  return decrypt_word(st, ct, trace);
}

void Separ::encrypt_words(CipherState &st, std::span<Word> words) const {
  for (Word &w : words) w = encrypt_word(st, w);
}

void Separ::decrypt_words(CipherState &st, std::span<Word> words) const {
  for (Word &w : words) w = decrypt_word(st, w);
}

std::vector<std::uint8_t> Separ::encrypt_message(const Nonce &nonce,
                                                 std::span<const std::uint8_t> data) const {
  auto words = bytes_to_words(data);
  CipherState st = initialize(nonce);
  encrypt_words(st, words);
  return words_to_bytes(words);
}

std::vector<std::uint8_t> Separ::decrypt_message(const Nonce &nonce,
                                                 std::span<const std::uint8_t> data) const {
  auto words = bytes_to_words(data);
  CipherState st = initialize(nonce);
  decrypt_words(st, words);
  return words_to_bytes(words);
}

std::vector<std::uint8_t> keystream(const Separ &cipher, const Nonce &nonce, std::size_t words) {
  CipherState st = cipher.initialize(nonce);
  std::vector<Word> ks(words, 0);
  cipher.encrypt_words(st, ks);
  return words_to_bytes(ks);
}

std::vector<Word> bytes_to_words(std::span<const std::uint8_t> data) {
  if (data.size() % 2 != 0) {
    throw PaddingError("message length must be a multiple of 2 octets, got " +
                       std::to_string(data.size()));
  }
  std::vector<Word> words(data.size() / 2);
  for (std::size_t i = 0; i < words.size(); ++i) {
    words[i] = static_cast<Word>((data[2 * i] << 8) | data[2 * i + 1]);
  }
  return words;
}

std::vector<std::uint8_t> words_to_bytes(std::span<const Word> words) {
  std::vector<std::uint8_t> out(words.size() * 2);
  for (std::size_t i = 0; i < words.size(); ++i) {
    out[2 * i] = static_cast<std::uint8_t>(words[i] >> 8);
    out[2 * i + 1] = static_cast<std::uint8_t>(words[i] & 0xFF);
  }
  return out;
}

}  // namespace separ
