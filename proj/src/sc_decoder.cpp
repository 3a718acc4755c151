#include "polar/sc_decoder.hpp"

#include <stdexcept>

namespace polar {

ScScratch::ScScratch(unsigned stages)
    : stages_(stages),
      block_length_(std::size_t{1} << stages),
      llr_((stages + 1) * block_length_),
      bits_((stages + 1) * block_length_) {}

namespace {

// Depth-first walk of the factor graph. Level 0 is the channel side; level
// `stages` holds the leaf decisions. Each level is a full row of N entries,
// sibling subtrees occupy disjoint ranges, so left-child partial sums stay
// valid while the right subtree runs.
struct ScTraversal {
    const std::vector<Bit>& frozen_mask;
    std::size_t block;
    double* llr;
    Bit* bits;

    void node(unsigned level, std::size_t base, std::size_t size) {
        if (size == 1) {
            bits[level * block + base] =
                decide_leaf(llr[level * block + base], frozen_mask[base] != 0);
            return;
        }
        const std::size_t half = size / 2;
        const double* parent = llr + level * block;
        double* child = llr + (level + 1) * block;

        for (std::size_t p = 0; p < half; ++p)
            child[base + p] = f_min_sum(parent[base + p], parent[base + half + p]);
        node(level + 1, base, half);

        const Bit* upper = bits + (level + 1) * block;
        for (std::size_t p = 0; p < half; ++p)
            child[base + half + p] =
                g_update(parent[base + p], parent[base + half + p], upper[base + p]);
        node(level + 1, base + half, half);

        Bit* out = bits + level * block;
        const Bit* kids = bits + (level + 1) * block;
        for (std::size_t p = 0; p < half; ++p) {
            const auto [a, b] = h_combine(kids[base + p], kids[base + half + p]);
            out[base + p] = a;
            out[base + half + p] = b;
        }
    }
};

}  // namespace

ScResult sc_decode(const CodeSpec& spec, const LlrVector& channel_llrs, ScScratch& scratch) {
    const std::size_t n = spec.block_length();
    if (channel_llrs.size() != n)
        throw std::invalid_argument("sc_decode: LLR length does not match the code");
    if (scratch.stages_ != spec.stages())
        throw std::invalid_argument("sc_decode: scratch sized for a different code");

    for (std::size_t i = 0; i < n; ++i) scratch.llr_[i] = saturate_llr(channel_llrs[i]);

    ScTraversal walk{spec.frozen_mask(), n, scratch.llr_.data(), scratch.bits_.data()};
    walk.node(0, 0, n);

    ScResult result;
    result.info_bits.reserve(spec.info_count());
    const Bit* leaves = scratch.bits_.data() + spec.stages() * n;
    for (std::size_t i = 0; i < n; ++i) {
        if (!spec.is_frozen(i)) result.info_bits.push_back(leaves[i]);
    }
    result.codeword.assign(scratch.bits_.begin(), scratch.bits_.begin() + n);
    return result;
}

ScResult sc_decode(const CodeSpec& spec, const LlrVector& channel_llrs) {
    ScScratch scratch(spec.stages());
    return sc_decode(spec, channel_llrs, scratch);
}

}  // namespace polar
