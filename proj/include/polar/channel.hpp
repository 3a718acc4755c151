#pragma once

#include <vector>

#include "polar/bits.hpp"
#include "polar/rng.hpp"
#include "polar/sc_decoder.hpp"

namespace polar {

// sigma = sqrt(1 / (2 * R * 10^(ebno_db/10))) for unit-energy BPSK, one real
// dimension per bit. R is the end-to-end information rate of the scheme.
double ebno_to_sigma(double ebno_db, double code_rate);

struct ChannelParams {
    double ebno_db;
    double code_rate;
    double sigma;

    ChannelParams(double ebno_db_, double code_rate_)
        : ebno_db(ebno_db_), code_rate(code_rate_), sigma(ebno_to_sigma(ebno_db_, code_rate_)) {}
};

// 0 -> +1, 1 -> -1, so a positive LLR votes for bit 0.
std::vector<double> bpsk_modulate(const BitVec& bits);

std::vector<double> awgn_transmit(const std::vector<double>& symbols, const ChannelParams& params,
                                  GaussianSource& noise);

// L_i = 2 y_i / sigma^2, saturated to +/- kLlrMax.
LlrVector channel_llr(const std::vector<double>& received, const ChannelParams& params);

}  // namespace polar
