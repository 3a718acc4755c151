#include "polar/construction.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace polar {

ReliabilityProfile bhattacharyya_profile(unsigned stages, double z0) {
    if (stages < 1) throw std::domain_error("bhattacharyya_profile: stage count must be >= 1");
    if (!(z0 > 0.0 && z0 < 1.0))
        throw std::domain_error("bhattacharyya_profile: z0 must lie in (0, 1)");

    const std::size_t n = std::size_t{1} << stages;
    ReliabilityProfile profile;
    profile.design_param = z0;
    profile.z.assign(n, z0);

    // Largest stride first, so index i's split path follows its binary
    // digits most significant first.
    for (std::size_t h = n / 2; h >= 1; h /= 2) {
        for (std::size_t i = 0; i < n; i += 2 * h) {
            for (std::size_t j = i; j < i + h; ++j) {
                const double z = profile.z[j];  // == profile.z[j + h]
                profile.z[j] = 2.0 * z - z * z;
                profile.z[j + h] = z * z;
            }
        }
    }
    return profile;
}

CodeSpec select_frozen_set(const ReliabilityProfile& profile, std::size_t info_count) {
    const std::size_t n = profile.z.size();
    if (n < 2 || (n & (n - 1)) != 0)
        throw std::invalid_argument("select_frozen_set: profile length is not a power of two");
    if (info_count < 1 || info_count > n)
        throw std::domain_error("select_frozen_set: info count out of range");

    unsigned stages = 0;
    while ((std::size_t{1} << stages) < n) ++stages;

    // Freeze the N-K largest z; equal z freezes the smaller index first.
    std::vector<std::uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        if (profile.z[a] != profile.z[b]) return profile.z[a] > profile.z[b];
        return a < b;
    });

    std::vector<std::uint32_t> frozen(order.begin(), order.begin() + (n - info_count));
    return CodeSpec(stages, std::move(frozen));
}

double design_snr_to_z0(double design_snr_db) {
    return std::exp(-std::pow(10.0, design_snr_db / 10.0));
}

}  // namespace polar
