#pragma once

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "polar/bits.hpp"
#include "polar/code_spec.hpp"

namespace polar {

using LlrVector = std::vector<double>;

// Saturation magnitude applied to LLRs at ingestion.
inline constexpr double kLlrMax = 30.0;

inline double saturate_llr(double v) {
    if (v > kLlrMax) return kLlrMax;
    if (v < -kLlrMax) return -kLlrMax;
    return v;
}

// Min-sum check-node update; sign(0) counts as +1.
inline double f_min_sum(double la, double lb) {
    const double m = std::min(std::fabs(la), std::fabs(lb));
    return ((la < 0.0) == (lb < 0.0)) ? m : -m;
}

// Variable-node update conditioned on the already-decided partial sum.
inline double g_update(double la, double lb, Bit sa) {
    return sa ? lb - la : la + lb;
}

// Partial-sum propagation: upper wire carries the XOR, lower wire passes
// through.
inline std::pair<Bit, Bit> h_combine(Bit sa, Bit sb) {
    return {static_cast<Bit>(sa ^ sb), sb};
}

// Frozen leaves decode to 0; info leaves threshold with the boundary L = 0
// deciding bit 0.
inline Bit decide_leaf(double llr, bool is_frozen) {
    if (is_frozen) return 0;
    return llr >= 0.0 ? 0 : 1;
}

struct ScResult {
    BitVec info_bits;  // decisions at non-frozen positions, ascending index
    BitVec codeword;   // re-encoded codeword estimate
};

// Reusable buffers for one decoder instance; one scratch per concurrent
// decode. Contents are overwritten by every call.
class ScScratch {
public:
    explicit ScScratch(unsigned stages);

    unsigned stages() const { return stages_; }

private:
    friend ScResult sc_decode(const CodeSpec&, const LlrVector&, ScScratch&);
    unsigned stages_;
    std::size_t block_length_;
    std::vector<double> llr_;  // (stages + 1) rows of N
    std::vector<Bit> bits_;    // same layout
};

// Depth-first successive cancellation over the n-stage factor graph.
ScResult sc_decode(const CodeSpec& spec, const LlrVector& channel_llrs, ScScratch& scratch);
ScResult sc_decode(const CodeSpec& spec, const LlrVector& channel_llrs);

}  // namespace polar
