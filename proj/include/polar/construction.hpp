#pragma once

#include <cstddef>
#include <vector>

#include "polar/code_spec.hpp"

namespace polar {

// Per-bit-channel unreliability under the erasure-channel surrogate,
// natural bit-channel order.
struct ReliabilityProfile {
    std::vector<double> z;  // each in [0, 1]
    double design_param = 0.5;
};

// Applies the splitting recursion z_upper = 2z - z^2, z_lower = z^2 for
// `stages` levels. Index i's path follows the binary digits of i, most
// significant digit first (0 = upper split).
ReliabilityProfile bhattacharyya_profile(unsigned stages, double z0);

// Freezes the N-K least reliable (largest z) channels; ties freeze the
// smaller index first.
CodeSpec select_frozen_set(const ReliabilityProfile& profile, std::size_t info_count);

// Maps a design SNR in dB onto the initial channel unreliability.
double design_snr_to_z0(double design_snr_db);

}  // namespace polar
