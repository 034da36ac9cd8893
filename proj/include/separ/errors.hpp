#pragma once

#include <stdexcept>

namespace separ {

// Malformed hexadecimal text (bad characters, odd digit count).
class HexError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A key, IV, or field of the wrong size.
class LengthError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Message length is not a whole number of 16-bit words.
class PaddingError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace separ
