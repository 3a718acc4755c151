#include "polar/sim.hpp"

#include <algorithm>
#include <chrono>
#include <memory>
#include <stdexcept>
#include <thread>

#include "polar/encoder.hpp"
#include "polar/rng.hpp"

namespace polar {

namespace {

// Stop conditions are evaluated only at multiples of this frame count, so
// frames_run is a pure function of (config, grid point) at any worker count.
constexpr std::uint64_t kStopCheckInterval = 4096;

constexpr std::uint64_t kMessagePurpose = 0x6d657373;  // stream tags
constexpr std::uint64_t kNoisePurpose = 0x6e6f6973;

// Per-worker reusable state.
struct Workspace {
    explicit Workspace(const SimConfig& config) {
        if (config.concatenated())
            concat = std::make_unique<ConcatScratch>(std::get<ConcatSpec>(config.scheme));
        else
            plain = std::make_unique<ScScratch>(std::get<CodeSpec>(config.scheme).stages());
    }
    std::unique_ptr<ScScratch> plain;
    std::unique_ptr<ConcatScratch> concat;
    BitVec message;
};

void draw_message(BitVec& message, std::size_t length, MessageSource source, std::uint64_t seed) {
    message.assign(length, 0);
    if (source == MessageSource::all_zero) return;
    SplitMix64 rng(seed);
    std::uint64_t word = 0;
    for (std::size_t i = 0; i < length; ++i) {
        if (i % 64 == 0) word = rng.next();
        message[i] = static_cast<Bit>((word >> (i % 64)) & 1);
    }
}

FrameOutcome run_frame_impl(const SimConfig& config, const ChannelParams& params,
                            std::uint64_t frame_index, Workspace& ws) {
    const std::size_t k = config.info_count();
    draw_message(ws.message, k, config.message_source,
                 derive_seed(config.base_seed, frame_index, kMessagePurpose));

    BitVec codeword;
    if (config.concatenated())
        codeword = concat_encode(std::get<ConcatSpec>(config.scheme), ws.message);
    else
        codeword = encode_recursive(std::get<CodeSpec>(config.scheme), ws.message);

    GaussianSource noise(derive_seed(config.base_seed, frame_index, kNoisePurpose));
    const std::vector<double> received =
        awgn_transmit(bpsk_modulate(codeword), params, noise);
    const LlrVector llrs = channel_llr(received, params);

    BitVec decoded;
    if (config.concatenated())
        decoded = concat_decode(std::get<ConcatSpec>(config.scheme), llrs, kHardDecisionLlr,
                                *ws.concat);
    else
        decoded = sc_decode(std::get<CodeSpec>(config.scheme), llrs, *ws.plain).info_bits;

    FrameOutcome outcome;
    for (std::size_t i = 0; i < k; ++i) outcome.bit_errors += (decoded[i] != ws.message[i]);
    outcome.frame_error = outcome.bit_errors > 0;
    return outcome;
}

struct Tally {
    std::uint64_t bit_errors = 0;
    std::uint64_t frame_errors = 0;
};

Tally run_range(const SimConfig& config, const ChannelParams& params, std::uint64_t first,
                std::uint64_t last) {
    Workspace ws(config);
    Tally tally;
    for (std::uint64_t frame = first; frame < last; ++frame) {
        const FrameOutcome outcome = run_frame_impl(config, params, frame, ws);
        tally.bit_errors += outcome.bit_errors;
        tally.frame_errors += outcome.frame_error;
    }
    return tally;
}

}  // namespace

std::size_t SimConfig::info_count() const {
    if (concatenated()) return std::get<ConcatSpec>(scheme).outer().info_count();
    return std::get<CodeSpec>(scheme).info_count();
}

double SimConfig::end_to_end_rate() const {
    if (concatenated()) return std::get<ConcatSpec>(scheme).overall_rate();
    return std::get<CodeSpec>(scheme).rate();
}

void SimConfig::validate() const {
    if (ebno_grid.empty()) throw std::invalid_argument("SimConfig: Eb/N0 grid is empty");
    for (std::size_t i = 1; i < ebno_grid.size(); ++i) {
        if (!(ebno_grid[i] > ebno_grid[i - 1]))
            throw std::invalid_argument("SimConfig: Eb/N0 grid must be strictly increasing");
    }
    if (max_frames < 1) throw std::invalid_argument("SimConfig: max_frames must be >= 1");
}

FrameOutcome run_frame(const SimConfig& config, const ChannelParams& params,
                       std::uint64_t frame_index) {
    Workspace ws(config);
    return run_frame_impl(config, params, frame_index, ws);
}

PointResult run_point(const SimConfig& config, double ebno_db, unsigned workers) {
    config.validate();
    if (workers < 1) workers = 1;
    const ChannelParams params(ebno_db, config.end_to_end_rate());
    const std::size_t k = config.info_count();

    PointResult result;
    result.ebno_db = ebno_db;
    result.sigma = params.sigma;
    result.base_seed = config.base_seed;

    const auto start = std::chrono::steady_clock::now();
    std::uint64_t frames = 0;
    std::uint64_t bit_errors = 0;
    std::uint64_t frame_errors = 0;
    std::string stop_reason = "max_frames";

    while (frames < config.max_frames) {
        const std::uint64_t batch = std::min(kStopCheckInterval, config.max_frames - frames);
        if (workers == 1 || batch < 2 * workers) {
            const Tally tally = run_range(config, params, frames, frames + batch);
            bit_errors += tally.bit_errors;
            frame_errors += tally.frame_errors;
        } else {
            std::vector<Tally> tallies(workers);
            std::vector<std::thread> pool;
            pool.reserve(workers);
            const std::uint64_t chunk = (batch + workers - 1) / workers;
            for (unsigned w = 0; w < workers; ++w) {
                const std::uint64_t first = frames + w * chunk;
                const std::uint64_t last = std::min(frames + batch, first + chunk);
                if (first >= last) break;
                pool.emplace_back([&, w, first, last] {
                    tallies[w] = run_range(config, params, first, last);
                });
            }
            for (auto& t : pool) t.join();
            for (const Tally& tally : tallies) {
                bit_errors += tally.bit_errors;
                frame_errors += tally.frame_errors;
            }
        }
        frames += batch;
        if (config.min_bit_errors > 0 && bit_errors >= config.min_bit_errors) {
            stop_reason = "min_bit_errors";
            break;
        }
    }

    result.frames = frames;
    result.info_bits = frames * k;
    result.bit_errors = bit_errors;
    result.frame_errors = frame_errors;
    result.stop_reason = stop_reason;
    result.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

std::vector<PointResult> run_sweep(const SimConfig& config, unsigned workers) {
    config.validate();
    std::vector<PointResult> results;
    results.reserve(config.ebno_grid.size());
    for (double ebno_db : config.ebno_grid) results.push_back(run_point(config, ebno_db, workers));
    return results;
}

}  // namespace polar
