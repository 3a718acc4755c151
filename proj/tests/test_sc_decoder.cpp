#include <cassert>
#include <cmath>
#include <iostream>

#include "polar/channel.hpp"
#include "polar/construction.hpp"
#include "polar/encoder.hpp"
#include "polar/rng.hpp"
#include "polar/sc_decoder.hpp"
#include "sc_oracle.hpp"

using namespace polar;

namespace {

template <typename Fn>
bool throws(Fn&& fn) {
    try {
        fn();
    } catch (const std::exception&) {
        return true;
    }
    return false;
}

BitVec random_bits(std::size_t length, SplitMix64& rng) {
    BitVec bits(length);
    for (auto& b : bits) b = static_cast<Bit>(rng.next() & 1);
    return bits;
}

LlrVector noiseless_llrs(const BitVec& codeword, double magnitude) {
    LlrVector llrs(codeword.size());
    for (std::size_t i = 0; i < codeword.size(); ++i)
        llrs[i] = codeword[i] ? -magnitude : magnitude;
    return llrs;
}

BitVec message_from_index(std::size_t value, std::size_t length) {
    BitVec bits(length);
    for (std::size_t i = 0; i < length; ++i) bits[i] = static_cast<Bit>((value >> i) & 1);
    return bits;
}

void test_update_rules() {
    assert(f_min_sum(2.0, -3.0) == -2.0);
    assert(f_min_sum(-1.5, -0.5) == 0.5);
    for (double x : {-4.0, 0.0, 7.25}) assert(f_min_sum(x, 0.0) == 0.0);
    assert(f_min_sum(0.0, -3.0) == 0.0);

    assert(g_update(2.0, 3.0, 0) == 5.0);
    assert(g_update(2.0, 3.0, 1) == 1.0);
    SplitMix64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        const double la = 10.0 * rng.next_unit() - 5.0;
        const double lb = 10.0 * rng.next_unit() - 5.0;
        assert(std::fabs(g_update(la, lb, 0) + g_update(la, lb, 1) - 2.0 * lb) < 1e-12);
    }

    assert((h_combine(0, 0) == std::pair<Bit, Bit>{0, 0}));
    assert((h_combine(1, 1) == std::pair<Bit, Bit>{0, 1}));
    assert((h_combine(0, 1) == std::pair<Bit, Bit>{1, 1}));
    assert((h_combine(1, 0) == std::pair<Bit, Bit>{1, 0}));

    assert(decide_leaf(-7.3, true) == 0);
    assert(decide_leaf(0.0, false) == 0);
    assert(decide_leaf(-0.1, false) == 1);
    assert(decide_leaf(0.1, false) == 0);
    std::cout << "update rules ok\n";
}

void test_size_two_trace() {
    const CodeSpec spec(1, {0});
    const ScResult r = sc_decode(spec, {-1.0, 3.0});
    assert((r.info_bits == BitVec{0}));
    assert((r.codeword == BitVec{0, 0}));
    std::cout << "size-2 trace ok\n";
}

void test_noiseless_roundtrips() {
    const CodeSpec spec(3, {0, 1, 2, 4});
    const ScResult r = sc_decode(spec, noiseless_llrs({1, 0, 1, 0, 0, 1, 0, 1}, 5.0));
    assert((r.info_bits == BitVec{1, 0, 1, 1}));
    assert((r.codeword == BitVec{1, 0, 1, 0, 0, 1, 0, 1}));

    for (std::size_t v = 0; v < 16; ++v) {
        const BitVec msg = message_from_index(v, 4);
        const BitVec codeword = encode_recursive(spec, msg);
        for (double magnitude : {0.5, 5.0}) {
            const ScResult result = sc_decode(spec, noiseless_llrs(codeword, magnitude));
            assert(result.info_bits == msg);
            assert(result.codeword == codeword);
        }
    }

    SplitMix64 rng(99);
    const CodeSpec big = select_frozen_set(bhattacharyya_profile(8, 0.5), 128);
    ScScratch scratch(big.stages());
    for (int trial = 0; trial < 200; ++trial) {
        const BitVec msg = random_bits(big.info_count(), rng);
        const BitVec codeword = encode_recursive(big, msg);
        const ScResult result = sc_decode(big, noiseless_llrs(codeword, 2.0), scratch);
        assert(result.info_bits == msg);
        assert(result.codeword == codeword);
    }
    std::cout << "noiseless roundtrips ok\n";
}

// Noisy decodes: re-encoded estimate matches the decided message, frozen
// decisions stay zero, and decisions survive positive scaling (kept below
// the ingestion saturation).
void test_decode_properties() {
    const CodeSpec spec = select_frozen_set(bhattacharyya_profile(6, 0.5), 32);
    const ChannelParams params(1.0, spec.rate());
    SplitMix64 rng(512);
    ScScratch scratch(spec.stages());
    for (int trial = 0; trial < 300; ++trial) {
        const BitVec msg = random_bits(spec.info_count(), rng);
        GaussianSource noise(derive_seed(77, trial, 0));
        const LlrVector llrs =
            channel_llr(awgn_transmit(bpsk_modulate(encode_recursive(spec, msg)), params, noise),
                        params);
        const ScResult result = sc_decode(spec, llrs, scratch);
        assert(result.codeword == encode_recursive(spec, result.info_bits));

        const sc_oracle::Result ref = sc_oracle::decode(spec, llrs);
        assert(ref.info_bits == result.info_bits);
        assert(ref.codeword == result.codeword);
        for (std::uint32_t i : spec.frozen_set()) assert(ref.u_hat[i] == 0);

        LlrVector bounded(llrs.size());
        for (std::size_t i = 0; i < llrs.size(); ++i) bounded[i] = llrs[i] / 10.0;
        const ScResult base = sc_decode(spec, bounded, scratch);
        for (double c : {0.25, 3.0, 9.0}) {
            LlrVector scaled(bounded.size());
            for (std::size_t i = 0; i < bounded.size(); ++i) scaled[i] = c * bounded[i];
            const ScResult same = sc_decode(spec, scaled, scratch);
            assert(same.info_bits == base.info_bits);
            assert(same.codeword == base.codeword);
        }
    }
    std::cout << "decode properties ok\n";
}

void test_oracle_agreement() {
    const CodeSpec spec = select_frozen_set(bhattacharyya_profile(4, 0.5), 8);
    const ChannelParams params(2.0, spec.rate());
    SplitMix64 rng(1234);
    ScScratch scratch(spec.stages());
    for (int frame = 0; frame < 1000; ++frame) {
        const BitVec msg = random_bits(spec.info_count(), rng);
        GaussianSource noise(derive_seed(5150, frame, 1));
        const LlrVector llrs =
            channel_llr(awgn_transmit(bpsk_modulate(encode_recursive(spec, msg)), params, noise),
                        params);
        const ScResult got = sc_decode(spec, llrs, scratch);
        const sc_oracle::Result ref = sc_oracle::decode(spec, llrs);
        assert(got.info_bits == ref.info_bits);
        assert(got.codeword == ref.codeword);
    }
    std::cout << "oracle agreement ok\n";
}

void test_errors() {
    const CodeSpec spec(3, {0, 1, 2, 4});
    assert(throws([&] { sc_decode(spec, LlrVector(7, 0.0)); }));
    ScScratch wrong(4);
    assert(throws([&] { sc_decode(spec, LlrVector(8, 0.0), wrong); }));

    // Saturation keeps non-finite inputs out of the recursion.
    LlrVector huge(8, 1e300);
    huge[3] = -1e300;
    const ScResult r = sc_decode(spec, huge);
    assert(r.info_bits.size() == 4);
    std::cout << "error paths ok\n";
}

}  // namespace

int main() {
    test_update_rules();
    test_size_two_trace();
    test_noiseless_roundtrips();
    test_decode_properties();
    test_oracle_agreement();
    test_errors();
    std::cout << "all sc decoder tests passed\n";
    return 0;
}
