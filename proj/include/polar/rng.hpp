#pragma once

#include <cmath>
#include <cstdint>

namespace polar {

// splitmix64 finalizer; also used to derive stream seeds.
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Tiny counter-style generator with identical output on every platform.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() { return mix64(state_ += 0x9e3779b97f4a7c15ULL); }

    // Uniform in [0, 1) with 53 bits of precision.
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Bounded draw without modulo bias beyond 2^-64.
    std::uint64_t next_below(std::uint64_t bound) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * bound) >> 64);
    }

private:
    std::uint64_t state_;
};

// Standard-normal variates via the polar form of the Box-Muller transform,
// drawn from a splitmix64 stream. Bit-for-bit reproducible per seed.
class GaussianSource {
public:
    explicit GaussianSource(std::uint64_t seed) : rng_(seed) {}

    double next() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * rng_.next_unit() - 1.0;
            v = 2.0 * rng_.next_unit() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double m = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * m;
        have_spare_ = true;
        return u * m;
    }

private:
    SplitMix64 rng_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

// Decorrelated stream seed for a (base seed, index, purpose) triple.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index, std::uint64_t purpose) {
    std::uint64_t h = mix64(base ^ 0x6a09e667f3bcc909ULL);
    h = mix64(h ^ (index + 0x9e3779b97f4a7c15ULL));
    h = mix64(h ^ (purpose + 0xbb67ae8584caa73bULL));
    return h;
}

}  // namespace polar
