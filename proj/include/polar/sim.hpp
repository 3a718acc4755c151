#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "polar/channel.hpp"
#include "polar/code_spec.hpp"
#include "polar/concat.hpp"

namespace polar {

enum class MessageSource { random, all_zero };

// One Monte Carlo campaign: a coding scheme, an Eb/N0 grid, and stopping
// budgets. Results are fully determined by this struct regardless of how
// many workers execute it.
struct SimConfig {
    explicit SimConfig(std::variant<CodeSpec, ConcatSpec> scheme_)
        : scheme(std::move(scheme_)) {}

    std::variant<CodeSpec, ConcatSpec> scheme;
    std::vector<double> ebno_grid;       // strictly increasing, non-empty
    std::uint64_t max_frames = 10000;    // >= 1
    std::uint64_t min_bit_errors = 200;  // 0 disables early stop
    std::uint64_t base_seed = 1;
    MessageSource message_source = MessageSource::random;

    bool concatenated() const { return std::holds_alternative<ConcatSpec>(scheme); }
    std::size_t info_count() const;   // end-to-end info bits per frame
    double end_to_end_rate() const;   // K/N, or K_outer/N_inner when concatenated
    void validate() const;
};

struct PointResult {
    double ebno_db = 0.0;
    double sigma = 0.0;
    std::uint64_t frames = 0;
    std::uint64_t info_bits = 0;
    std::uint64_t bit_errors = 0;
    std::uint64_t frame_errors = 0;
    std::string stop_reason;  // "min_bit_errors" or "max_frames"
    double wall_seconds = 0.0;
    std::uint64_t base_seed = 0;

    double ber() const {
        return info_bits ? static_cast<double>(bit_errors) / static_cast<double>(info_bits) : 0.0;
    }
    double fer() const {
        return frames ? static_cast<double>(frame_errors) / static_cast<double>(frames) : 0.0;
    }
};

struct FrameOutcome {
    std::uint64_t bit_errors = 0;
    bool frame_error = false;
};

// Encode -> modulate -> AWGN -> LLR -> decode for one frame. Message and
// noise streams are seeded by (base_seed, frame_index), so the outcome does
// not depend on execution order.
FrameOutcome run_frame(const SimConfig& config, const ChannelParams& params,
                       std::uint64_t frame_index);

// Runs frames until min_bit_errors is reached or max_frames is exhausted.
// The stop decision is taken at fixed batch boundaries, so counts are
// identical at every worker count.
PointResult run_point(const SimConfig& config, double ebno_db, unsigned workers = 1);

std::vector<PointResult> run_sweep(const SimConfig& config, unsigned workers = 1);

}  // namespace polar
