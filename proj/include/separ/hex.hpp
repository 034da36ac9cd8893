#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace separ {

// Uppercase, no separators.
std::string to_hex(std::span<const std::uint8_t> bytes);

// Accepts upper or lower case. Whitespace is ignored so that vectors wrapped
// across lines (or split by a stray space) still decode. Throws HexError on
// any other character or an odd number of digits.
std::vector<std::uint8_t> from_hex(std::string_view hex);

// Digits remaining after whitespace is stripped.
std::string strip_hex(std::string_view hex);

}  // namespace separ
