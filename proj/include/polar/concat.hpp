#pragma once

#include "polar/bits.hpp"
#include "polar/code_spec.hpp"
#include "polar/interleaver.hpp"
#include "polar/sc_decoder.hpp"

namespace polar {

// Magnitude given to the hard bits handed from the inner to the outer
// decoder. Any positive value yields the same decisions under scale
// invariance of successive cancellation.
inline constexpr double kHardDecisionLlr = 20.0;

// Serial concatenation: outer encoder -> interleaver -> inner encoder. The
// outer codeword exactly fills the inner code's info positions
// (K_inner = N_outer).
class ConcatSpec {
public:
    ConcatSpec(CodeSpec outer, CodeSpec inner, InterleaverSpec interleaver);

    const CodeSpec& outer() const { return outer_; }
    const CodeSpec& inner() const { return inner_; }
    const Permutation& permutation() const { return perm_; }
    const InterleaverSpec& interleaver() const { return interleaver_; }
    double overall_rate() const { return outer_.rate() * inner_.rate(); }

private:
    CodeSpec outer_;
    CodeSpec inner_;
    InterleaverSpec interleaver_;
    Permutation perm_;
};

BitVec concat_encode(const ConcatSpec& spec, const BitVec& info_bits);

struct ConcatScratch {
    explicit ConcatScratch(const ConcatSpec& spec)
        : inner(spec.inner().stages()), outer(spec.outer().stages()) {}
    ScScratch inner;
    ScScratch outer;
};

// Inner SC decode -> deinterleave -> hard-to-LLR map -> outer SC decode.
BitVec concat_decode(const ConcatSpec& spec, const LlrVector& channel_llrs,
                     double hard_llr, ConcatScratch& scratch);
BitVec concat_decode(const ConcatSpec& spec, const LlrVector& channel_llrs,
                     double hard_llr = kHardDecisionLlr);

}  // namespace polar
