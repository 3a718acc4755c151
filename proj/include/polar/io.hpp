#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "polar/code_spec.hpp"
#include "polar/concat.hpp"
#include "polar/sim.hpp"

namespace polar {

// Code spec file: { "n": int, "frozen": [sorted ints] }.
CodeSpec load_code_spec(const std::string& path);
void save_code_spec(const std::string& path, const CodeSpec& spec);

// Concatenated spec file:
// { "outer": {...}, "inner": {...},
//   "interleaver": {"kind": "identity"|"rowcol"|"random", "rows"?, "cols"?, "seed"?} }
ConcatSpec load_concat_spec(const std::string& path);
void save_concat_spec(const std::string& path, const ConcatSpec& spec);

// True when the file at `path` holds a concatenated spec (has an "outer" key).
bool is_concat_spec_file(const std::string& path);

// One decimal value per line.
LlrVector load_llr_file(const std::string& path);

// Identifies one scheme in a results file.
struct SchemeDescription {
    std::string scheme;  // "plain" or "concatenated"
    std::size_t n_outer = 0;
    std::size_t k_outer = 0;
    std::size_t n_inner = 0;
    std::size_t k_inner = 0;
    std::string interleaver = "none";
    double overall_rate = 0.0;
};

SchemeDescription describe_scheme(const SimConfig& config);

struct ResultBlock {
    SchemeDescription scheme;
    std::vector<PointResult> points;
};

// Fixed column order:
// scheme,n_outer,k_outer,n_inner,k_inner,interleaver,overall_rate,ebno_db,
// sigma,frames,info_bits,bit_errors,frame_errors,ber,fer,stop_reason,base_seed
void write_results_csv(std::ostream& out, const std::vector<ResultBlock>& blocks);
void write_results_csv(const std::string& path, const std::vector<ResultBlock>& blocks);

// Plot-ready "ebno_db ber" pairs, one gnuplot-style block per scheme.
void write_points_file(const std::string& path, const std::vector<ResultBlock>& blocks);

}  // namespace polar
