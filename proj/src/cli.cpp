#include "wreath/cli.hpp"

#include <complex>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "wreath/errors.hpp"
#include "wreath/fftcost.hpp"
#include "wreath/group.hpp"
#include "wreath/labeltree.hpp"
#include "wreath/matrep.hpp"
#include "wreath/reps.hpp"

namespace wreath::cli {

namespace {

labels::LabelTree shift_values(const labels::LabelTree& t, std::uint32_t delta) {
    labels::LabelTree out{t.value + delta, {}};
    for (const auto& c : t.children) out.children.push_back(shift_values(c, delta));
    return out;
}

std::string render_label(const labels::LabelTree& t, bool one_indexed) {
    return labels::serialize(one_indexed ? shift_values(t, 1) : t);
}

nlohmann::ordered_json matrix_to_json(const matrep::ComplexMatrix& m) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            row.push_back({m(i, j).real(), m(i, j).imag()});
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string coefficients_to_json(const matrep::FourierCoefficients& c) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < c.labels.size(); ++i) {
        nlohmann::ordered_json entry;
        entry["label"] = nlohmann::ordered_json::parse(labels::serialize(c.labels[i]));
        entry["matrix"] = matrix_to_json(c.coefficients[i]);
        arr.push_back(std::move(entry));
    }
    return arr.dump();
}

// input: array of {"g": <element>, "value": [re, im]}, every element once
std::map<std::uint64_t, std::complex<double>> read_function_file(const std::string& path,
                                                                 const RSpec& R) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw usage_error("dft: cannot open input file: " + path);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw usage_error("dft: bad input JSON: " + std::string(e.what()));
    }
    if (!j.is_array()) throw usage_error("dft: input must be a JSON array");
    std::map<std::uint64_t, std::complex<double>> f;
    for (const auto& entry : j) {
        if (!entry.is_object() || !entry.contains("g") || !entry.contains("value"))
            throw usage_error("dft: each entry needs \"g\" and \"value\"");
        const auto& v = entry["value"];
        if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
            throw usage_error("dft: \"value\" must be [re, im]");
        const groups::GroupElement g = groups::element_from_json(entry["g"].dump(), R);
        const std::uint64_t rank = groups::element_rank(R, g);
        if (f.contains(rank))
            throw usage_error("dft: duplicate element " + groups::element_to_json(g));
        f[rank] = {v[0].get<double>(), v[1].get<double>()};
    }
    return f;
}

}  // namespace

RSpec parse_rspec(const std::string& text) {
    std::vector<std::uint32_t> parts;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = text.find(',', pos);
        std::string piece = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
        // tolerate surrounding whitespace
        const auto first = piece.find_first_not_of(" \t");
        const auto last = piece.find_last_not_of(" \t");
        piece = first == std::string::npos ? "" : piece.substr(first, last - first + 1);
        if (piece.empty() || piece.find_first_not_of("0123456789") != std::string::npos)
            throw usage_error("rspec: expected comma-separated positive integers, got \"" + text +
                              "\"");
        unsigned long long v = 0;
        try {
            v = std::stoull(piece);
        } catch (const std::exception&) {
            throw usage_error("rspec: component out of range in \"" + text + "\"");
        }
        if (v == 0 || v > 0xFFFFFFFFull)
            throw usage_error("rspec: components must be in [1, 2^32) in \"" + text + "\"");
        parts.push_back(static_cast<std::uint32_t>(v));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return RSpec(std::move(parts));
}

namespace {

struct Options {
    std::string rspec_text;
    bool json = false;
    bool one_indexed = false;
    bool conjugacy = false;
    bool roundtrip = false;
    std::string input_path;
    std::string output_path;
    double alpha = 3.0;
    double big_o = 1.0;
    std::string delta_policy = "stab";
    std::uint64_t max_irreps = labels::kDefaultIrrepCap;
    std::uint64_t max_order = 0;  // 0 = command default
};

int dispatch(const std::string& command, const Options& opt, std::ostream& out) {
    const RSpec R = parse_rspec(opt.rspec_text);

    if (command == "order") {
        out << reps::group_order(R).str() << "\n";
    } else if (command == "count") {
        out << reps::count_irreps(R).str() << "\n";
    } else if (command == "irreps") {
        const auto all = labels::enumerate_labels(R, opt.max_irreps);
        if (opt.json) {
            out << '[';
            for (std::size_t i = 0; i < all.size(); ++i) {
                if (i) out << ',';
                out << render_label(all[i], opt.one_indexed);
            }
            out << "]\n";
        } else {
            for (const auto& t : all) out << render_label(t, opt.one_indexed) << "\n";
        }
    } else if (command == "dims") {
        const auto dims = reps::dims_multiset(R, opt.max_irreps);
        out << '{';
        bool first = true;
        for (const auto& [dim, mult] : dims) {
            if (!first) out << ',';
            first = false;
            out << '"' << dim.str() << "\":\"" << mult.str() << '"';
        }
        out << "}\n";
    } else if (command == "verify") {
        const auto report = reps::verify_completeness(
            R, opt.conjugacy, opt.max_irreps,
            opt.max_order ? opt.max_order : reps::kDefaultConjugacyCap);
        out << reps::to_json(report) << "\n";
        if (!report.pass) return 3;
    } else if (command == "conjugacy") {
        out << groups::conjugacy_class_count(
                   R, opt.max_order ? opt.max_order : groups::kDefaultConjugacyCap)
                   .str()
            << "\n";
    } else if (command == "dft") {
        const std::uint64_t cap = opt.max_order ? opt.max_order : matrep::kDefaultDftCap;
        const auto f = read_function_file(opt.input_path, R);
        const auto coeffs = matrep::dft(R, f, cap);
        const std::string coeff_json = coefficients_to_json(coeffs);
        if (!opt.output_path.empty()) {
            std::ofstream of(opt.output_path, std::ios::binary);
            if (!of) throw usage_error("dft: cannot open output file: " + opt.output_path);
            of << coeff_json << "\n";
        }
        if (opt.roundtrip) {
            const auto back = matrep::idft(R, coeffs, cap);
            double max_err = 0.0;
            for (const auto& [rank, value] : f)
                max_err = std::max(max_err, std::abs(back[rank] - value));
            nlohmann::ordered_json rj;
            rj["max_roundtrip_error"] = max_err;
            out << rj.dump() << "\n";
        } else if (opt.output_path.empty()) {
            out << coeff_json << "\n";
        }
    } else if (command == "fft-bound") {
        fftcost::CostParams params;
        params.alpha = opt.alpha;
        params.big_o_constant = opt.big_o;
        params.delta_policy = opt.delta_policy == "zero" ? fftcost::DeltaPolicy::zero
                                                         : fftcost::DeltaPolicy::stabilizer;
        out << fftcost::to_json(fftcost::cost_report(R, params, opt.max_irreps)) << "\n";
    }
    return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact computation with iterated wreath products of cyclic groups"};
    app.require_subcommand(1);
    Options opt;

    auto add_rspec = [&](CLI::App* cmd) {
        cmd->add_option("rspec", opt.rspec_text, "comma-separated tower radices, e.g. 2,2,3")
            ->required();
    };

    auto* c_order = app.add_subcommand("order", "group order |W(r|k)|");
    add_rspec(c_order);
    auto* c_count = app.add_subcommand("count", "number of irreducible representations");
    add_rspec(c_count);
    auto* c_irreps = app.add_subcommand("irreps", "enumerate canonical labels");
    add_rspec(c_irreps);
    c_irreps->add_flag("--json", opt.json, "emit one JSON array instead of lines");
    c_irreps->add_flag("--one-indexed", opt.one_indexed, "render values 1-indexed");
    c_irreps->add_option("--max-irreps", opt.max_irreps, "enumeration cap");
    auto* c_dims = app.add_subcommand("dims", "dimension -> multiplicity multiset");
    add_rspec(c_dims);
    c_dims->add_option("--max-irreps", opt.max_irreps, "enumeration cap");
    auto* c_verify = app.add_subcommand("verify", "completeness report");
    add_rspec(c_verify);
    c_verify->add_flag("--conjugacy", opt.conjugacy, "include brute-force conjugacy count");
    c_verify->add_option("--max-irreps", opt.max_irreps, "enumeration cap");
    c_verify->add_option("--max-order", opt.max_order, "conjugacy brute-force cap");
    auto* c_conj = app.add_subcommand("conjugacy", "brute-force conjugacy class count");
    add_rspec(c_conj);
    c_conj->add_option("--max-order", opt.max_order, "group order cap");
    auto* c_dft = app.add_subcommand("dft", "nonabelian Fourier transform of a function file");
    add_rspec(c_dft);
    c_dft->add_option("--input", opt.input_path, "function JSON file")->required();
    c_dft->add_option("--output", opt.output_path, "write coefficients here instead of stdout");
    c_dft->add_flag("--roundtrip", opt.roundtrip, "report max |idft(dft(f)) - f|");
    c_dft->add_option("--max-order", opt.max_order, "group order cap");
    auto* c_fft = app.add_subcommand("fft-bound", "operation-count upper bound report");
    add_rspec(c_fft);
    c_fft->add_option("--alpha", opt.alpha, "matrix multiplication exponent");
    c_fft->add_option("--big-o", opt.big_o, "universal FFT constant");
    c_fft->add_option("--delta-policy", opt.delta_policy, "stab|zero")
        ->check(CLI::IsMember({"stab", "zero"}));
    c_fft->add_option("--max-irreps", opt.max_irreps, "enumeration cap");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        for (auto* cmd : app.get_subcommands()) return dispatch(cmd->get_name(), opt, out);
        return 2;
    } catch (const capacity_error& e) {
        err << "capacity: " << e.what() << "\n";
        return 1;
    } catch (const usage_error& e) {
        err << "usage: " << e.what() << "\n";
        return 2;
    } catch (const parse_error& e) {
        err << "parse: " << e.what() << "\n";
        return 2;
    } catch (const shape_error& e) {
        err << "shape: " << e.what() << "\n";
        return 2;
    } catch (const compat_error& e) {
        err << "compat: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "domain: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace wreath::cli
