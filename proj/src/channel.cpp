#include "polar/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace polar {

double ebno_to_sigma(double ebno_db, double code_rate) {
    if (!(code_rate > 0.0 && code_rate <= 1.0))
        throw std::domain_error("ebno_to_sigma: code rate must lie in (0, 1]");
    const double ebno_linear = std::pow(10.0, ebno_db / 10.0);
    return std::sqrt(1.0 / (2.0 * code_rate * ebno_linear));
}

std::vector<double> bpsk_modulate(const BitVec& bits) {
    std::vector<double> symbols(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) symbols[i] = bits[i] ? -1.0 : 1.0;
    return symbols;
}

std::vector<double> awgn_transmit(const std::vector<double>& symbols, const ChannelParams& params,
                                  GaussianSource& noise) {
    std::vector<double> received(symbols.size());
    for (std::size_t i = 0; i < symbols.size(); ++i)
        received[i] = symbols[i] + params.sigma * noise.next();
    return received;
}

LlrVector channel_llr(const std::vector<double>& received, const ChannelParams& params) {
    const double scale = 2.0 / (params.sigma * params.sigma);
    LlrVector llrs(received.size());
    for (std::size_t i = 0; i < received.size(); ++i) llrs[i] = saturate_llr(scale * received[i]);
    return llrs;
}

}  // namespace polar
