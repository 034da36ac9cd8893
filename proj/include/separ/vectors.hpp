#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "separ/cipher.hpp"
#include "separ/types.hpp"

namespace separ {

// One known-answer record:
//
//   # optional comment / name line
//   key=<64 hex digits>
//   iv=<32 hex digits>
//   pt=<hex>
//   ct=<hex>
//
// Records are separated by blank lines. Unknown keys are rejected.
struct TestVector {
  std::string name;
  MasterKey key;
  Nonce iv;
  std::vector<std::uint8_t> pt;
  std::vector<std::uint8_t> ct;
};

std::vector<TestVector> parse_vectors(std::istream &in);
std::vector<TestVector> load_vectors(const std::string &path);
void write_vector(std::ostream &out, const TestVector &v);

struct VectorCheck {
  std::string name;
  bool ok = false;
  std::vector<std::uint8_t> actual;
};

// Encrypts pt and compares against ct; also confirms ct decrypts back to pt.
VectorCheck check_vector(const TestVector &v, const LfsrSpec &lfsr = LfsrSpec::standard());

}  // namespace separ
