#include "polar/interleaver.hpp"

#include <numeric>

#include "polar/bits.hpp"
#include "polar/rng.hpp"

namespace polar {

namespace {

std::vector<std::uint32_t> invert(const std::vector<std::uint32_t>& pi) {
    std::vector<std::uint32_t> inv(pi.size());
    for (std::size_t k = 0; k < pi.size(); ++k) inv[pi[k]] = static_cast<std::uint32_t>(k);
    return inv;
}

}  // namespace

Permutation Permutation::identity(std::size_t length) {
    if (length == 0) throw std::invalid_argument("Permutation: length must be >= 1");
    Permutation p;
    p.pi_.resize(length);
    std::iota(p.pi_.begin(), p.pi_.end(), 0);
    p.pi_inv_ = p.pi_;
    return p;
}

Permutation Permutation::row_column(std::size_t rows, std::size_t cols) {
    if (rows == 0 || cols == 0)
        throw std::invalid_argument("Permutation: rows and cols must be >= 1");
    Permutation p;
    p.pi_.resize(rows * cols);
    // Read column-major out of a row-major array: output k = (col, row).
    std::size_t k = 0;
    for (std::size_t col = 0; col < cols; ++col) {
        for (std::size_t row = 0; row < rows; ++row)
            p.pi_[k++] = static_cast<std::uint32_t>(row * cols + col);
    }
    p.pi_inv_ = invert(p.pi_);
    return p;
}

Permutation Permutation::random(std::size_t length, std::uint64_t seed) {
    if (length == 0) throw std::invalid_argument("Permutation: length must be >= 1");
    Permutation p;
    p.pi_.resize(length);
    std::iota(p.pi_.begin(), p.pi_.end(), 0);
    SplitMix64 rng(seed);
    for (std::size_t i = length - 1; i > 0; --i) {
        const std::size_t j = static_cast<std::size_t>(rng.next_below(i + 1));
        std::swap(p.pi_[i], p.pi_[j]);
    }
    p.pi_inv_ = invert(p.pi_);
    return p;
}

Permutation Permutation::from_map(std::vector<std::uint32_t> pi) {
    if (pi.empty()) throw std::invalid_argument("Permutation: length must be >= 1");
    std::vector<Bit> seen(pi.size(), 0);
    for (std::uint32_t v : pi) {
        if (v >= pi.size() || seen[v]) throw std::invalid_argument("Permutation: not a bijection");
        seen[v] = 1;
    }
    Permutation p;
    p.pi_ = std::move(pi);
    p.pi_inv_ = invert(p.pi_);
    return p;
}

Permutation InterleaverSpec::build(std::size_t length) const {
    switch (kind) {
        case Kind::identity:
            return Permutation::identity(length);
        case Kind::row_column:
            if (rows * cols != length)
                throw std::invalid_argument("InterleaverSpec: rows * cols must equal the length");
            return Permutation::row_column(rows, cols);
        case Kind::random:
            return Permutation::random(length, seed);
    }
    throw std::logic_error("InterleaverSpec: unknown kind");
}

std::string InterleaverSpec::label() const {
    switch (kind) {
        case Kind::identity:
            return "identity";
        case Kind::row_column:
            return "rowcol-" + std::to_string(rows) + "x" + std::to_string(cols);
        case Kind::random:
            return "random-" + std::to_string(seed);
    }
    return "unknown";
}

}  // namespace polar
