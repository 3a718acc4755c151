// Command-line front end: frozen-set construction, single-frame encode and
// decode, and BER/FER Monte Carlo sweeps over a BPSK/AWGN link.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "polar/construction.hpp"
#include "polar/encoder.hpp"
#include "polar/io.hpp"
#include "polar/sim.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitConfig = 3;
constexpr int kExitIo = 4;

std::string fmt_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

unsigned default_workers() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::ios_base::failure("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::ios_base::failure("cannot open " + path + " for writing");
    out << text;
    if (!out) throw std::ios_base::failure("write to " + path + " failed");
}

struct GridOptions {
    double ebno_start = 0.0;
    double ebno_stop = 0.0;
    bool stop_given = false;
    double ebno_step = 0.5;

    std::vector<double> build() const {
        const double stop = stop_given ? ebno_stop : ebno_start;
        if (!(ebno_step > 0.0)) throw std::invalid_argument("--ebno-step must be positive");
        if (stop < ebno_start - 1e-12)
            throw std::invalid_argument("--ebno-stop must be >= --ebno-start");
        std::vector<double> grid;
        for (double v = ebno_start; v <= stop + 1e-9; v += ebno_step) grid.push_back(v);
        return grid;
    }
};

struct InterleaverOptions {
    std::string kind = "random";
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::uint64_t seed = 1;

    polar::InterleaverSpec resolve() const {
        polar::InterleaverSpec spec;
        if (kind == "identity") {
            spec.kind = polar::InterleaverSpec::Kind::identity;
        } else if (kind == "rowcol") {
            if (rows == 0 || cols == 0)
                throw std::invalid_argument("--interleaver rowcol requires --rows and --cols");
            spec.kind = polar::InterleaverSpec::Kind::row_column;
            spec.rows = rows;
            spec.cols = cols;
        } else if (kind == "random") {
            spec.kind = polar::InterleaverSpec::Kind::random;
            spec.seed = seed;
        } else {
            throw std::invalid_argument("--interleaver must be identity, rowcol, or random");
        }
        return spec;
    }
};

struct BudgetOptions {
    std::uint64_t max_frames = 10000;
    std::uint64_t min_bit_errors = 200;
    std::uint64_t seed = 1;
    unsigned workers = default_workers();
    std::string message_source = "random";

    polar::MessageSource resolve_source() const {
        if (message_source == "random") return polar::MessageSource::random;
        if (message_source == "zero") return polar::MessageSource::all_zero;
        throw std::invalid_argument("--message-source must be random or zero");
    }
};

polar::MessageSource to_source(const BudgetOptions& b) { return b.resolve_source(); }

void print_point_line(const polar::SchemeDescription& d, const polar::PointResult& p) {
    std::cout << d.scheme << "  ebno_db=" << fmt_real(p.ebno_db) << "  ber=" << fmt_real(p.ber())
              << "  fer=" << fmt_real(p.fer()) << "  frames=" << p.frames
              << "  bit_errors=" << p.bit_errors << "  stop=" << p.stop_reason << "\n";
}

// ---- construct ----

struct ConstructOptions {
    unsigned n = 0;
    std::size_t k = 0;
    double z0 = 0.5;
    std::optional<double> design_snr_db;
    std::string out = "polar_spec.json";
};

int run_construct(const ConstructOptions& opt) {
    const double z0 = opt.design_snr_db ? polar::design_snr_to_z0(*opt.design_snr_db) : opt.z0;
    std::cerr << "config: command=construct n=" << opt.n << " k=" << opt.k
              << " z0=" << fmt_real(z0)
              << " design-snr-db="
              << (opt.design_snr_db ? fmt_real(*opt.design_snr_db) : std::string("unset"))
              << " out=" << opt.out << "\n";

    const polar::ReliabilityProfile profile = polar::bhattacharyya_profile(opt.n, z0);
    const polar::CodeSpec spec = polar::select_frozen_set(profile, opt.k);
    polar::save_code_spec(opt.out, spec);

    double z_min = profile.z[0], z_max = profile.z[0], cutoff = 0.0;
    for (std::size_t i = 0; i < profile.z.size(); ++i) {
        z_min = std::min(z_min, profile.z[i]);
        z_max = std::max(z_max, profile.z[i]);
        if (!spec.is_frozen(i)) cutoff = std::max(cutoff, profile.z[i]);
    }
    std::cout << "wrote " << opt.out << " (N=" << spec.block_length()
              << ", K=" << spec.info_count() << ", rate=" << fmt_real(spec.rate()) << ")\n";
    std::cout << "z profile: min=" << fmt_real(z_min) << " max=" << fmt_real(z_max)
              << " cutoff=" << fmt_real(cutoff) << "\n";
    return 0;
}

// ---- encode / decode ----

struct CodecOptions {
    std::string spec_path;
    std::string input_path;
    std::string out;
};

int run_encode(const CodecOptions& opt) {
    std::cerr << "config: command=encode spec=" << opt.spec_path << " input=" << opt.input_path
              << " out=" << (opt.out.empty() ? "stdout" : opt.out) << "\n";
    const polar::BitVec info = polar::parse_bit_string(read_text_file(opt.input_path));
    polar::BitVec codeword;
    if (polar::is_concat_spec_file(opt.spec_path))
        codeword = polar::concat_encode(polar::load_concat_spec(opt.spec_path), info);
    else
        codeword = polar::encode_recursive(polar::load_code_spec(opt.spec_path), info);
    const std::string text = polar::to_bit_string(codeword);
    std::cout << text << "\n";
    if (!opt.out.empty()) write_text_file(opt.out, text + "\n");
    return 0;
}

int run_decode(const CodecOptions& opt) {
    std::cerr << "config: command=decode spec=" << opt.spec_path << " input=" << opt.input_path
              << " out=" << (opt.out.empty() ? "stdout" : opt.out) << "\n";
    const polar::LlrVector llrs = polar::load_llr_file(opt.input_path);
    polar::BitVec info;
    if (polar::is_concat_spec_file(opt.spec_path))
        info = polar::concat_decode(polar::load_concat_spec(opt.spec_path), llrs);
    else
        info = polar::sc_decode(polar::load_code_spec(opt.spec_path), llrs).info_bits;
    const std::string text = polar::to_bit_string(info);
    std::cout << text << "\n";
    if (!opt.out.empty()) write_text_file(opt.out, text + "\n");
    return 0;
}

// ---- simulate / compare ----

struct SimulateOptions {
    std::string spec_path;
    std::string outer_spec_path;
    std::string inner_spec_path;
    InterleaverOptions interleaver;
    GridOptions grid;
    BudgetOptions budget;
    std::string out = "results.csv";
    std::string points;
};

polar::SimConfig make_sim_config(std::variant<polar::CodeSpec, polar::ConcatSpec> scheme,
                                 const SimulateOptions& opt) {
    polar::SimConfig config(std::move(scheme));
    config.ebno_grid = opt.grid.build();
    config.max_frames = opt.budget.max_frames;
    config.min_bit_errors = opt.budget.min_bit_errors;
    config.base_seed = opt.budget.seed;
    config.message_source = to_source(opt.budget);
    config.validate();
    return config;
}

std::variant<polar::CodeSpec, polar::ConcatSpec> load_scheme(const SimulateOptions& opt) {
    const bool pair_given = !opt.outer_spec_path.empty() || !opt.inner_spec_path.empty();
    if (!opt.spec_path.empty() && pair_given)
        throw std::invalid_argument("use either --spec or --outer-spec/--inner-spec, not both");
    if (!opt.spec_path.empty()) {
        if (polar::is_concat_spec_file(opt.spec_path))
            return polar::load_concat_spec(opt.spec_path);
        return polar::load_code_spec(opt.spec_path);
    }
    if (opt.outer_spec_path.empty() || opt.inner_spec_path.empty())
        throw std::invalid_argument(
            "a scheme is required: --spec FILE, or --outer-spec and --inner-spec");
    return polar::ConcatSpec(polar::load_code_spec(opt.outer_spec_path),
                             polar::load_code_spec(opt.inner_spec_path),
                             opt.interleaver.resolve());
}

void echo_sim_config(const char* command, const polar::SimConfig& config,
                     const SimulateOptions& opt) {
    const polar::SchemeDescription d = polar::describe_scheme(config);
    std::ostringstream grid;
    for (std::size_t i = 0; i < config.ebno_grid.size(); ++i)
        grid << (i ? "," : "") << fmt_real(config.ebno_grid[i]);
    std::cerr << "config: command=" << command << " scheme=" << d.scheme << " n_outer=" << d.n_outer
              << " k_outer=" << d.k_outer << " n_inner=" << d.n_inner << " k_inner=" << d.k_inner
              << " interleaver=" << d.interleaver << " overall_rate=" << fmt_real(d.overall_rate)
              << " ebno_db=[" << grid.str() << "]"
              << " max-frames=" << config.max_frames
              << " min-bit-errors=" << config.min_bit_errors << " seed=" << config.base_seed
              << " workers=" << opt.budget.workers << " message-source="
              << opt.budget.message_source << " out=" << opt.out
              << " points=" << (opt.points.empty() ? "unset" : opt.points) << "\n";
}

int run_simulate(const SimulateOptions& opt) {
    const polar::SimConfig config = make_sim_config(load_scheme(opt), opt);
    echo_sim_config("simulate", config, opt);

    polar::ResultBlock block;
    block.scheme = polar::describe_scheme(config);
    for (double ebno_db : config.ebno_grid) {
        polar::PointResult p = polar::run_point(config, ebno_db, opt.budget.workers);
        print_point_line(block.scheme, p);
        block.points.push_back(std::move(p));
    }

    polar::write_results_csv(opt.out, {block});
    if (!opt.points.empty()) polar::write_points_file(opt.points, {block});
    std::cout << "wrote " << opt.out << "\n";
    return 0;
}

struct CompareOptions {
    SimulateOptions sim;
    double z0 = 0.5;
    std::optional<double> design_snr_db;
};

int run_compare(const CompareOptions& opt) {
    auto scheme = load_scheme(opt.sim);
    if (!std::holds_alternative<polar::ConcatSpec>(scheme))
        throw std::invalid_argument("compare requires a concatenated scheme");
    const polar::ConcatSpec concat = std::get<polar::ConcatSpec>(std::move(scheme));

    // Matched-rate plain reference: same channel block length, K = R_s * N,
    // which lands exactly on the outer info count.
    const double z0 = opt.design_snr_db ? polar::design_snr_to_z0(*opt.design_snr_db) : opt.z0;
    const polar::CodeSpec plain = polar::select_frozen_set(
        polar::bhattacharyya_profile(concat.inner().stages(), z0), concat.outer().info_count());

    const polar::SimConfig concat_config = make_sim_config(concat, opt.sim);
    polar::SimConfig plain_config = concat_config;
    plain_config.scheme = plain;

    echo_sim_config("compare", concat_config, opt.sim);
    std::cerr << "config: compare plain reference n=" << plain.block_length()
              << " k=" << plain.info_count() << " z0=" << fmt_real(z0) << "\n";

    std::vector<polar::ResultBlock> blocks(2);
    blocks[0].scheme = polar::describe_scheme(plain_config);
    blocks[1].scheme = polar::describe_scheme(concat_config);
    for (double ebno_db : concat_config.ebno_grid) {
        polar::PointResult p = polar::run_point(plain_config, ebno_db, opt.sim.budget.workers);
        print_point_line(blocks[0].scheme, p);
        blocks[0].points.push_back(std::move(p));
        polar::PointResult c = polar::run_point(concat_config, ebno_db, opt.sim.budget.workers);
        print_point_line(blocks[1].scheme, c);
        blocks[1].points.push_back(std::move(c));
    }

    polar::write_results_csv(opt.sim.out, blocks);
    if (!opt.sim.points.empty()) polar::write_points_file(opt.sim.points, blocks);
    std::cout << "wrote " << opt.sim.out << "\n";
    return 0;
}

void add_grid_flags(CLI::App* cmd, GridOptions& grid) {
    cmd->add_option("--ebno-start", grid.ebno_start, "first Eb/N0 grid point in dB")->required();
    auto* stop = cmd->add_option("--ebno-stop", grid.ebno_stop, "last Eb/N0 grid point in dB");
    cmd->add_option("--ebno-step", grid.ebno_step, "grid step in dB (default 0.5)");
    cmd->parse_complete_callback([&grid, stop] { grid.stop_given = stop->count() > 0; });
}

void add_budget_flags(CLI::App* cmd, BudgetOptions& budget) {
    cmd->add_option("--max-frames", budget.max_frames, "frame budget per grid point");
    cmd->add_option("--min-bit-errors", budget.min_bit_errors,
                    "early-stop bit-error target per point (0 disables)");
    cmd->add_option("--seed", budget.seed, "base seed for message and noise streams");
    cmd->add_option("--workers", budget.workers, "concurrent decode workers");
    cmd->add_option("--message-source", budget.message_source, "random or zero");
}

void add_scheme_flags(CLI::App* cmd, SimulateOptions& opt) {
    cmd->add_option("--spec", opt.spec_path, "plain or concatenated spec file");
    cmd->add_option("--outer-spec", opt.outer_spec_path, "outer code spec file");
    cmd->add_option("--inner-spec", opt.inner_spec_path, "inner code spec file");
    cmd->add_option("--interleaver", opt.interleaver.kind, "identity, rowcol, or random");
    cmd->add_option("--rows", opt.interleaver.rows, "rowcol interleaver rows");
    cmd->add_option("--cols", opt.interleaver.cols, "rowcol interleaver cols");
    cmd->add_option("--interleaver-seed", opt.interleaver.seed, "random interleaver seed");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"polar code construction, codec, and BER/FER simulation"};
    app.require_subcommand(1);

    ConstructOptions construct_opt;
    auto* construct = app.add_subcommand("construct", "build a frozen set and write a spec file");
    construct->add_option("--n", construct_opt.n, "block length exponent, N = 2^n")->required();
    construct->add_option("--k", construct_opt.k, "info bit count")->required();
    construct->add_option("--z0", construct_opt.z0, "initial channel unreliability (default 0.5)");
    double design_snr_tmp = 0.0;
    auto* snr_flag = construct->add_option("--design-snr-db", design_snr_tmp,
                                           "design SNR in dB, overrides --z0");
    construct->add_option("--out", construct_opt.out, "output spec file");

    CodecOptions encode_opt;
    auto* encode = app.add_subcommand("encode", "encode one frame of info bits");
    encode->add_option("--spec", encode_opt.spec_path, "spec file")->required();
    encode->add_option("input", encode_opt.input_path, "file holding a 0/1 info string")
        ->required();
    encode->add_option("--out", encode_opt.out, "also write the codeword here");

    CodecOptions decode_opt;
    auto* decode = app.add_subcommand("decode", "decode one frame of channel LLRs");
    decode->add_option("--spec", decode_opt.spec_path, "spec file")->required();
    decode->add_option("input", decode_opt.input_path, "file with one LLR per line")->required();
    decode->add_option("--out", decode_opt.out, "also write the info bits here");

    SimulateOptions simulate_opt;
    auto* simulate = app.add_subcommand("simulate", "Monte Carlo BER/FER sweep over Eb/N0");
    add_scheme_flags(simulate, simulate_opt);
    add_grid_flags(simulate, simulate_opt.grid);
    add_budget_flags(simulate, simulate_opt.budget);
    simulate->add_option("--out", simulate_opt.out, "results CSV path");
    simulate->add_option("--points", simulate_opt.points, "also write (ebno_db, ber) pairs here");

    CompareOptions compare_opt;
    auto* compare =
        app.add_subcommand("compare", "concatenated vs matched-rate plain polar on one grid");
    add_scheme_flags(compare, compare_opt.sim);
    add_grid_flags(compare, compare_opt.sim.grid);
    add_budget_flags(compare, compare_opt.sim.budget);
    compare->add_option("--z0", compare_opt.z0, "plain-reference construction z0 (default 0.5)");
    double compare_snr_tmp = 0.0;
    auto* compare_snr_flag = compare->add_option("--design-snr-db", compare_snr_tmp,
                                                 "plain-reference design SNR in dB");
    compare->add_option("--out", compare_opt.sim.out, "results CSV path");
    compare->add_option("--points", compare_opt.sim.points,
                        "also write (ebno_db, ber) pairs here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    if (snr_flag->count() > 0) construct_opt.design_snr_db = design_snr_tmp;
    if (compare_snr_flag->count() > 0) compare_opt.design_snr_db = compare_snr_tmp;

    try {
        if (construct->parsed()) return run_construct(construct_opt);
        if (encode->parsed()) return run_encode(encode_opt);
        if (decode->parsed()) return run_decode(decode_opt);
        if (simulate->parsed()) return run_simulate(simulate_opt);
        if (compare->parsed()) return run_compare(compare_opt);
    } catch (const std::ios_base::failure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
    return 0;
}
