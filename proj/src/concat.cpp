#include "polar/concat.hpp"

#include <stdexcept>

#include "polar/encoder.hpp"

namespace polar {

ConcatSpec::ConcatSpec(CodeSpec outer, CodeSpec inner, InterleaverSpec interleaver)
    : outer_(std::move(outer)),
      inner_(std::move(inner)),
      interleaver_(interleaver),
      perm_(interleaver_.build(outer_.block_length())) {
    if (inner_.info_count() != outer_.block_length())
        throw std::invalid_argument(
            "ConcatSpec: inner info count must equal the outer block length");
}

BitVec concat_encode(const ConcatSpec& spec, const BitVec& info_bits) {
    const BitVec outer_codeword = encode_recursive(spec.outer(), info_bits);
    const BitVec permuted = interleave(spec.permutation(), outer_codeword);
    return encode_recursive(spec.inner(), permuted);
}

BitVec concat_decode(const ConcatSpec& spec, const LlrVector& channel_llrs, double hard_llr,
                     ConcatScratch& scratch) {
    if (!(hard_llr > 0.0))
        throw std::domain_error("concat_decode: hard-decision LLR magnitude must be positive");

    const ScResult inner = sc_decode(spec.inner(), channel_llrs, scratch.inner);
    const BitVec outer_codeword_estimate = deinterleave(spec.permutation(), inner.info_bits);

    LlrVector outer_llrs(outer_codeword_estimate.size());
    for (std::size_t i = 0; i < outer_llrs.size(); ++i)
        outer_llrs[i] = (1.0 - 2.0 * outer_codeword_estimate[i]) * hard_llr;

    return sc_decode(spec.outer(), outer_llrs, scratch.outer).info_bits;
}

BitVec concat_decode(const ConcatSpec& spec, const LlrVector& channel_llrs, double hard_llr) {
    ConcatScratch scratch(spec);
    return concat_decode(spec, channel_llrs, hard_llr, scratch);
}

}  // namespace polar
