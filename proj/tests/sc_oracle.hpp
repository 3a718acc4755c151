#pragma once

// Test-only successive-cancellation reference: explicit per-stage arrays of
// LLRs and partial sums over the factor graph, no recursion. Kept separate
// from the library decoder so the two can check each other.

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "polar/code_spec.hpp"
#include "polar/sc_decoder.hpp"

namespace sc_oracle {

struct Result {
    polar::BitVec u_hat;      // all N leaf decisions
    polar::BitVec info_bits;  // non-frozen decisions, ascending index
    polar::BitVec codeword;   // partial sums propagated back to the channel side
};

inline double f_ref(double la, double lb) {
    const double sign = (la >= 0.0 ? 1.0 : -1.0) * (lb >= 0.0 ? 1.0 : -1.0);
    return sign * std::min(std::fabs(la), std::fabs(lb));
}

inline double g_ref(double la, double lb, polar::Bit sa) { return (1.0 - 2.0 * sa) * la + lb; }

inline Result decode(const polar::CodeSpec& spec, const polar::LlrVector& channel_llrs) {
    const std::size_t n = spec.block_length();
    const unsigned stages = spec.stages();
    if (channel_llrs.size() != n) throw std::invalid_argument("oracle: LLR length mismatch");

    // L[j][i] and S[j][i]: stage 0 is the channel side, stage `stages` the
    // message side.
    std::vector<std::vector<double>> L(stages + 1, std::vector<double>(n, 0.0));
    std::vector<std::vector<polar::Bit>> S(stages + 1, std::vector<polar::Bit>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        double v = channel_llrs[i];
        if (v > 30.0) v = 30.0;
        if (v < -30.0) v = -30.0;
        L[0][i] = v;
    }

    for (std::size_t phi = 0; phi < n; ++phi) {
        // Recompute the LLR blocks on the path from the channel to leaf phi.
        for (unsigned j = 1; j <= stages; ++j) {
            const std::size_t m = n >> j;                    // block size at stage j
            const std::size_t b = phi >> (stages - j);       // block index at stage j
            const std::size_t parent_base = (b >> 1) * 2 * m;
            const std::size_t base = b * m;
            if (b % 2 == 0) {
                for (std::size_t p = 0; p < m; ++p)
                    L[j][base + p] = f_ref(L[j - 1][parent_base + p], L[j - 1][parent_base + m + p]);
            } else {
                // Left sibling block at this stage holds finished partial sums.
                for (std::size_t p = 0; p < m; ++p)
                    L[j][base + p] = g_ref(L[j - 1][parent_base + p],
                                           L[j - 1][parent_base + m + p], S[j][parent_base + p]);
            }
        }

        if (spec.is_frozen(phi))
            S[stages][phi] = 0;
        else
            S[stages][phi] = L[stages][phi] >= 0.0 ? 0 : 1;

        // Propagate partial sums toward the channel while right-hand blocks
        // complete.
        for (unsigned j = stages; j >= 1; --j) {
            const std::size_t b = phi >> (stages - j);
            if (b % 2 == 0) break;
            const std::size_t m = n >> j;
            const std::size_t left = (b - 1) * m;
            const std::size_t right = b * m;
            for (std::size_t p = 0; p < m; ++p) {
                S[j - 1][left + p] = static_cast<polar::Bit>(S[j][left + p] ^ S[j][right + p]);
                S[j - 1][left + m + p] = S[j][right + p];
            }
        }
    }

    Result result;
    result.u_hat = S[stages];
    result.codeword = S[0];
    result.info_bits.reserve(spec.info_count());
    for (std::size_t i = 0; i < n; ++i) {
        if (!spec.is_frozen(i)) result.info_bits.push_back(S[stages][i]);
    }
    return result;
}

}  // namespace sc_oracle
