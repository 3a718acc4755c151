#include <cassert>
#include <cmath>
#include <iostream>

#include "polar/channel.hpp"
#include "polar/rng.hpp"

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

void test_modulation() {
    const std::vector<double> symbols = bpsk_modulate({0, 1, 1, 0});
    assert((symbols == std::vector<double>{1.0, -1.0, -1.0, 1.0}));
    assert((bpsk_modulate(BitVec(5, 0)) == std::vector<double>(5, 1.0)));

    // Hard sign decision inverts the map in the noiseless case.
    const BitVec bits = {1, 0, 0, 1, 1};
    const std::vector<double> tx = bpsk_modulate(bits);
    for (std::size_t i = 0; i < bits.size(); ++i) assert((tx[i] < 0.0 ? 1 : 0) == bits[i]);
    std::cout << "modulation ok\n";
}

void test_sigma() {
    assert(ebno_to_sigma(0.0, 0.5) == 1.0);
    assert(std::fabs(ebno_to_sigma(3.010, 0.5) - std::sqrt(0.5)) < 2e-4);

    double prev = ebno_to_sigma(-5.0, 0.5);
    for (double db = -4.5; db <= 8.0; db += 0.5) {
        const double s = ebno_to_sigma(db, 0.5);
        assert(s < prev);
        prev = s;
    }

    assert(throws([] { ebno_to_sigma(1.0, 0.0); }));
    assert(throws([] { ebno_to_sigma(1.0, -0.5); }));
    assert(throws([] { ebno_to_sigma(1.0, 1.5); }));

    // Normalizing by the overall rate instead of the inner rate rescales
    // sigma by sqrt(R_inner / R_s).
    const double rs = 0.25, r_inner = 0.5, db = 2.0;
    const double ratio = ebno_to_sigma(db, rs) / ebno_to_sigma(db, r_inner);
    assert(std::fabs(ratio - std::sqrt(r_inner / rs)) < 1e-12);
    std::cout << "sigma ok\n";
}

void test_llr() {
    const ChannelParams params(0.0, 0.5);  // sigma = 1
    const LlrVector llrs = channel_llr({0.0, 1.0, -0.75}, params);
    assert(llrs[0] == 0.0);
    assert(llrs[1] == 2.0);
    assert(llrs[2] == -1.5);

    // Saturation at +/- 30.
    const LlrVector big = channel_llr({100.0, -100.0}, params);
    assert(big[0] == kLlrMax && big[1] == -kLlrMax);

    SplitMix64 rng(2);
    for (int trial = 0; trial < 1000; ++trial) {
        const double y = 4.0 * rng.next_unit() - 2.0;
        const double l = channel_llr({y}, params)[0];
        assert((l >= 0.0) == (y >= 0.0));
        assert(std::fabs(l - 2.0 * y) < 1e-15);
    }
    std::cout << "llr ok\n";
}

void test_awgn_statistics() {
    const ChannelParams params(1.5, 0.5);
    const std::size_t samples = 1000000;
    std::vector<double> zeros(samples, 0.0);
    GaussianSource noise(424242);
    const std::vector<double> y = awgn_transmit(zeros, params, noise);

    double sum = 0.0;
    for (double v : y) sum += v;
    const double mean = sum / samples;
    double sq = 0.0;
    for (double v : y) sq += (v - mean) * (v - mean);
    const double variance = sq / samples;

    assert(std::fabs(mean) < 4.0 * params.sigma / 1000.0);
    assert(std::fabs(variance - params.sigma * params.sigma) <
           0.01 * params.sigma * params.sigma);

    // Same seed reproduces the same noise; different seeds do not.
    GaussianSource a(7), b(7), c(8);
    bool all_equal = true, any_diff = false;
    for (int i = 0; i < 1000; ++i) {
        const double va = a.next(), vb = b.next(), vc = c.next();
        all_equal = all_equal && (va == vb);
        any_diff = any_diff || (va != vc);
    }
    assert(all_equal && any_diff);
    std::cout << "awgn statistics ok\n";
}

void test_seed_derivation() {
    assert(derive_seed(1, 2, 3) == derive_seed(1, 2, 3));
    assert(derive_seed(1, 2, 3) != derive_seed(1, 3, 3));
    assert(derive_seed(1, 2, 3) != derive_seed(1, 2, 4));
    assert(derive_seed(1, 2, 3) != derive_seed(2, 2, 3));

    // Adjacent frame indices must give uncorrelated streams.
    SplitMix64 s0(derive_seed(9, 0, 0));
    SplitMix64 s1(derive_seed(9, 1, 0));
    int same = 0;
    for (int i = 0; i < 64; ++i) same += ((s0.next() ^ s1.next()) == 0);
    assert(same == 0);
    std::cout << "seed derivation ok\n";
}

}  // namespace

int main() {
    test_modulation();
    test_sigma();
    test_llr();
    test_awgn_statistics();
    test_seed_derivation();
    std::cout << "all channel tests passed\n";
    return 0;
}
