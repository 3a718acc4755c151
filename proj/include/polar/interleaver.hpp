#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace polar {

// Bijective index map pi over {0..N-1} with its precomputed inverse.
class Permutation {
public:
    static Permutation identity(std::size_t length);
    // Write row-major, read column-major.
    static Permutation row_column(std::size_t rows, std::size_t cols);
    // Uniform permutation via Fisher-Yates over a seeded deterministic stream.
    static Permutation random(std::size_t length, std::uint64_t seed);
    // Validates that `pi` is a bijection.
    static Permutation from_map(std::vector<std::uint32_t> pi);

    std::size_t size() const { return pi_.size(); }
    std::size_t map(std::size_t k) const { return pi_[k]; }
    std::size_t inverse_map(std::size_t j) const { return pi_inv_[j]; }
    const std::vector<std::uint32_t>& forward() const { return pi_; }
    const std::vector<std::uint32_t>& inverse() const { return pi_inv_; }

private:
    Permutation() = default;
    std::vector<std::uint32_t> pi_;
    std::vector<std::uint32_t> pi_inv_;
};

// Construction recipe for a permutation; kept next to the permutation so
// interleavers serialize and label themselves.
struct InterleaverSpec {
    enum class Kind { identity, row_column, random };

    Kind kind = Kind::random;
    std::size_t rows = 0;  // row_column only
    std::size_t cols = 0;
    std::uint64_t seed = 0;  // random only

    Permutation build(std::size_t length) const;
    std::string label() const;
};

// out[k] = in[pi(k)]
template <typename T>
std::vector<T> interleave(const Permutation& perm, const std::vector<T>& in) {
    if (in.size() != perm.size())
        throw std::invalid_argument("interleave: sequence length does not match permutation");
    std::vector<T> out(in.size());
    for (std::size_t k = 0; k < in.size(); ++k) out[k] = in[perm.map(k)];
    return out;
}

// Exact inverse of interleave: out[pi(k)] = in[k].
template <typename T>
std::vector<T> deinterleave(const Permutation& perm, const std::vector<T>& in) {
    if (in.size() != perm.size())
        throw std::invalid_argument("deinterleave: sequence length does not match permutation");
    std::vector<T> out(in.size());
    for (std::size_t k = 0; k < in.size(); ++k) out[perm.map(k)] = in[k];
    return out;
}

}  // namespace polar
