#include "polar/encoder.hpp"

#include <stdexcept>

namespace polar {

GeneratorMatrix kronecker_generator(unsigned stages, unsigned max_stages) {
    if (stages < 1) throw std::domain_error("kronecker_generator: stage count must be >= 1");
    if (stages > max_stages)
        throw std::length_error("kronecker_generator: block length exceeds the matrix cap");

    // Iterated doubling of the lower-triangular 2x2 kernel:
    // G_{2m} = [[G_m, 0], [G_m, G_m]].
    GeneratorMatrix g;
    g.size = 1;
    g.entries = {1};
    for (unsigned s = 0; s < stages; ++s) {
        const std::size_t m = g.size;
        GeneratorMatrix next;
        next.size = 2 * m;
        next.entries.assign(next.size * next.size, 0);
        for (std::size_t r = 0; r < m; ++r) {
            for (std::size_t c = 0; c < m; ++c) {
                const Bit v = g.entries[r * m + c];
                next.entries[r * next.size + c] = v;
                next.entries[(r + m) * next.size + c] = v;
                next.entries[(r + m) * next.size + (c + m)] = v;
            }
        }
        g = std::move(next);
    }
    return g;
}

BitVec expand_message(const CodeSpec& spec, const BitVec& info_bits) {
    if (info_bits.size() != spec.info_count())
        throw std::invalid_argument("expand_message: info length does not match the code");
    BitVec u(spec.block_length(), 0);
    std::size_t next = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (!spec.is_frozen(i)) u[i] = info_bits[next++];
    }
    return u;
}

BitVec encode_matrix(const CodeSpec& spec, const BitVec& info_bits) {
    const GeneratorMatrix g = kronecker_generator(spec.stages());
    const BitVec u = expand_message(spec, info_bits);
    const std::size_t n = spec.block_length();
    BitVec x(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (!u[i]) continue;
        for (std::size_t j = 0; j < n; ++j) x[j] ^= g.entries[i * n + j];
    }
    return x;
}

BitVec encode_recursive(const CodeSpec& spec, const BitVec& info_bits) {
    BitVec x = expand_message(spec, info_bits);
    const std::size_t n = x.size();
    for (std::size_t h = 1; h < n; h <<= 1) {
        for (std::size_t i = 0; i < n; i += 2 * h) {
            for (std::size_t j = i; j < i + h; ++j) x[j] ^= x[j + h];
        }
    }
    return x;
}

}  // namespace polar
