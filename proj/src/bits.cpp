#include "polar/bits.hpp"

#include <stdexcept>

namespace polar {

std::string to_bit_string(const BitVec& bits) {
    std::string s;
    s.reserve(bits.size());
    for (Bit b : bits) s.push_back(b ? '1' : '0');
    return s;
}

BitVec parse_bit_string(std::string_view text) {
    std::size_t begin = 0;
    std::size_t end = text.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
    if (begin == end) throw std::invalid_argument("parse_bit_string: empty input");

    BitVec bits;
    bits.reserve(end - begin);
    for (std::size_t i = begin; i < end; ++i) {
        const char c = text[i];
        if (c != '0' && c != '1')
            throw std::invalid_argument("parse_bit_string: character is not 0 or 1");
        bits.push_back(static_cast<Bit>(c - '0'));
    }
    return bits;
}

}  // namespace polar
