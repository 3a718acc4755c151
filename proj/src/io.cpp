#include "polar/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace polar {

namespace {

using nlohmann::json;

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::ios_base::failure("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
    return j;
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::ios_base::failure("cannot open " + path + " for writing");
    out << text;
    if (!out) throw std::ios_base::failure("write to " + path + " failed");
}

CodeSpec code_spec_from_json(const json& j, const std::string& context) {
    if (!j.is_object() || !j.contains("n") || !j.contains("frozen"))
        throw std::invalid_argument(context + ": expected {\"n\": int, \"frozen\": [ints]}");
    const unsigned stages = j.at("n").get<unsigned>();
    std::vector<std::uint32_t> frozen = j.at("frozen").get<std::vector<std::uint32_t>>();
    return CodeSpec(stages, std::move(frozen));
}

json code_spec_to_json(const CodeSpec& spec) {
    return json{{"n", spec.stages()}, {"frozen", spec.frozen_set()}};
}

InterleaverSpec interleaver_from_json(const json& j, const std::string& context) {
    InterleaverSpec spec;
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "identity") {
        spec.kind = InterleaverSpec::Kind::identity;
    } else if (kind == "rowcol") {
        spec.kind = InterleaverSpec::Kind::row_column;
        spec.rows = j.at("rows").get<std::size_t>();
        spec.cols = j.at("cols").get<std::size_t>();
    } else if (kind == "random") {
        spec.kind = InterleaverSpec::Kind::random;
        spec.seed = j.at("seed").get<std::uint64_t>();
    } else {
        throw std::invalid_argument(context + ": unknown interleaver kind '" + kind + "'");
    }
    return spec;
}

json interleaver_to_json(const InterleaverSpec& spec) {
    switch (spec.kind) {
        case InterleaverSpec::Kind::identity:
            return json{{"kind", "identity"}};
        case InterleaverSpec::Kind::row_column:
            return json{{"kind", "rowcol"}, {"rows", spec.rows}, {"cols", spec.cols}};
        case InterleaverSpec::Kind::random:
            return json{{"kind", "random"}, {"seed", spec.seed}};
    }
    throw std::logic_error("interleaver_to_json: unknown kind");
}

// At least 6 significant digits; 10 keeps reruns byte-comparable without
// printing noise.
std::string fmt_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

}  // namespace

CodeSpec load_code_spec(const std::string& path) {
    return code_spec_from_json(read_json_file(path), path);
}

void save_code_spec(const std::string& path, const CodeSpec& spec) {
    write_text_file(path, code_spec_to_json(spec).dump(2) + "\n");
}

ConcatSpec load_concat_spec(const std::string& path) {
    const json j = read_json_file(path);
    if (!j.contains("outer") || !j.contains("inner") || !j.contains("interleaver"))
        throw std::invalid_argument(path + ": expected outer, inner, and interleaver entries");
    return ConcatSpec(code_spec_from_json(j.at("outer"), path + " (outer)"),
                      code_spec_from_json(j.at("inner"), path + " (inner)"),
                      interleaver_from_json(j.at("interleaver"), path));
}

void save_concat_spec(const std::string& path, const ConcatSpec& spec) {
    const json j{{"outer", code_spec_to_json(spec.outer())},
                 {"inner", code_spec_to_json(spec.inner())},
                 {"interleaver", interleaver_to_json(spec.interleaver())}};
    write_text_file(path, j.dump(2) + "\n");
}

bool is_concat_spec_file(const std::string& path) {
    return read_json_file(path).contains("outer");
}

LlrVector load_llr_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::ios_base::failure("cannot open " + path);
    LlrVector llrs;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::size_t consumed = 0;
        double v = 0.0;
        try {
            v = std::stod(line, &consumed);
        } catch (const std::exception&) {
            throw std::invalid_argument(path + ":" + std::to_string(line_no) +
                                        ": not a decimal value");
        }
        if (line.find_first_not_of(" \t\r", consumed) != std::string::npos)
            throw std::invalid_argument(path + ":" + std::to_string(line_no) +
                                        ": trailing characters after value");
        if (!std::isfinite(v))
            throw std::invalid_argument(path + ":" + std::to_string(line_no) +
                                        ": LLR must be finite");
        llrs.push_back(v);
    }
    if (llrs.empty()) throw std::invalid_argument(path + ": no LLR values found");
    return llrs;
}

SchemeDescription describe_scheme(const SimConfig& config) {
    SchemeDescription d;
    if (config.concatenated()) {
        const auto& spec = std::get<ConcatSpec>(config.scheme);
        d.scheme = "concatenated";
        d.n_outer = spec.outer().block_length();
        d.k_outer = spec.outer().info_count();
        d.n_inner = spec.inner().block_length();
        d.k_inner = spec.inner().info_count();
        d.interleaver = spec.interleaver().label();
        d.overall_rate = spec.overall_rate();
    } else {
        const auto& spec = std::get<CodeSpec>(config.scheme);
        d.scheme = "plain";
        d.n_inner = spec.block_length();
        d.k_inner = spec.info_count();
        d.interleaver = "none";
        d.overall_rate = spec.rate();
    }
    return d;
}

void write_results_csv(std::ostream& out, const std::vector<ResultBlock>& blocks) {
    out << "# rng=splitmix64 gaussian=box-muller-polar ebno_norm=end-to-end-info-rate llr_max="
        << fmt_real(kLlrMax) << "\n";
    out << "scheme,n_outer,k_outer,n_inner,k_inner,interleaver,overall_rate,ebno_db,sigma,"
           "frames,info_bits,bit_errors,frame_errors,ber,fer,stop_reason,base_seed\n";
    for (const ResultBlock& block : blocks) {
        const SchemeDescription& s = block.scheme;
        for (const PointResult& p : block.points) {
            out << s.scheme << ',' << s.n_outer << ',' << s.k_outer << ',' << s.n_inner << ','
                << s.k_inner << ',' << s.interleaver << ',' << fmt_real(s.overall_rate) << ','
                << fmt_real(p.ebno_db) << ',' << fmt_real(p.sigma) << ',' << p.frames << ','
                << p.info_bits << ',' << p.bit_errors << ',' << p.frame_errors << ','
                << fmt_real(p.ber()) << ',' << fmt_real(p.fer()) << ',' << p.stop_reason << ','
                << p.base_seed << "\n";
        }
    }
}

void write_results_csv(const std::string& path, const std::vector<ResultBlock>& blocks) {
    std::ostringstream out;
    write_results_csv(out, blocks);
    write_text_file(path, out.str());
}

void write_points_file(const std::string& path, const std::vector<ResultBlock>& blocks) {
    std::ostringstream out;
    for (const ResultBlock& block : blocks) {
        out << "# " << block.scheme.scheme << " n_inner=" << block.scheme.n_inner
            << " overall_rate=" << fmt_real(block.scheme.overall_rate) << "\n";
        for (const PointResult& p : block.points)
            out << fmt_real(p.ebno_db) << ' ' << fmt_real(p.ber()) << "\n";
        out << "\n\n";
    }
    write_text_file(path, out.str());
}

}  // namespace polar
