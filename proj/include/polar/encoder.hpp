#pragma once

#include <cstddef>
#include <vector>

#include "polar/bits.hpp"
#include "polar/code_spec.hpp"

namespace polar {

// Dense GF(2) generator matrix, row-major. Materialized only for small N;
// it serves as an encoding oracle, the recursive encoder is the production
// path.
struct GeneratorMatrix {
    std::size_t size = 0;
    std::vector<Bit> entries;  // size * size entries

    Bit at(std::size_t row, std::size_t col) const { return entries[row * size + col]; }
};

// Largest exponent for which the full matrix may be materialized (N = 2^12).
inline constexpr unsigned kMaxMatrixStages = 12;

GeneratorMatrix kronecker_generator(unsigned stages, unsigned max_stages = kMaxMatrixStages);

// Places info bits at non-frozen indices in ascending order, 0 elsewhere.
BitVec expand_message(const CodeSpec& spec, const BitVec& info_bits);

// X = U * G over GF(2) via the explicit matrix. O(N^2), oracle path.
BitVec encode_matrix(const CodeSpec& spec, const BitVec& info_bits);

// Same map via in-place butterfly stages. O(N log N), production path.
BitVec encode_recursive(const CodeSpec& spec, const BitVec& info_bits);

}  // namespace polar
