#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace polar {

using Bit = std::uint8_t;

// One 0/1 value per element, index 0 first. Prints as an unspaced 0/1 string.
using BitVec = std::vector<Bit>;

std::string to_bit_string(const BitVec& bits);

// Accepts an unspaced 0/1 string (surrounding whitespace tolerated).
BitVec parse_bit_string(std::string_view text);

}  // namespace polar
