// grsq: exact generalized Reed-Solomon codec over Q with bit-width
// instrumentation. Subcommands: mkcode, encode, corrupt, decode, stats,
// bounds, runtime-trend. Exit codes: 0 success, 2 parse/config error,
// 3 decode failure.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "grsq/bitwidth.hpp"
#include "grsq/bounds.hpp"
#include "grsq/codec.hpp"
#include "grsq/experiments.hpp"
#include "grsq/io.hpp"
#include "grsq/sampling.hpp"

namespace {

using namespace grsq;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitDecodeFailure = 3;

std::ofstream open_out(const std::string& path) {
    std::ofstream f(path);
    if (!f) throw std::invalid_argument("cannot write '" + path + "'");
    return f;
}

void emit(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
    } else {
        open_out(path) << text;
    }
}

std::vector<Rat> alphas_from_flags(const std::string& choice, std::size_t n,
                                   const std::string& alpha_list) {
    if (choice == "custom") {
        std::vector<Rat> alphas = parse_rational_list(alpha_list);
        if (alphas.size() != n) throw std::invalid_argument("--alpha-list must have n entries");
        return alphas;
    }
    if (!alpha_list.empty()) throw std::invalid_argument("--alpha-list needs --alphas custom");
    return pick_alphas(alpha_choice_from_string(choice), n, {});
}

struct MkcodeArgs {
    std::size_t n = 0, k = 0;
    std::string alphas = "min";
    std::string alpha_list;
    std::string preset = "vprime1";
    std::string v_list, vprime_list;
    std::string out;
};

int run_mkcode(const MkcodeArgs& a) {
    std::vector<Rat> alphas = alphas_from_flags(a.alphas, a.n, a.alpha_list);
    GrsCode code;
    Preset preset = preset_from_string(a.preset);
    if (preset == Preset::Custom) {
        if (!a.v_list.empty() && !a.vprime_list.empty())
            throw std::invalid_argument("give either --v-list or --vprime-list, not both");
        if (!a.v_list.empty())
            code = make_code_with_v(a.n, a.k, std::move(alphas), parse_rational_list(a.v_list));
        else if (!a.vprime_list.empty())
            code = make_code_with_v_prime(a.n, a.k, std::move(alphas),
                                          parse_rational_list(a.vprime_list));
        else
            throw std::invalid_argument("custom preset needs --v-list or --vprime-list");
    } else {
        if (!a.v_list.empty() || !a.vprime_list.empty())
            throw std::invalid_argument("--v-list/--vprime-list need --preset custom");
        code = make_code(a.n, a.k, std::move(alphas), preset);
    }
    std::ostringstream os;
    save_code(os, code);
    emit(a.out, os.str());
    return kExitOk;
}

struct PipelineArgs {
    std::string code_file, in_file, out_file, err_file, report_file;
    std::string gen = "vandermonde";
    // corrupt-only
    std::string errors_file;
    std::size_t tau = 0;
    std::size_t error_bits = 32;
    std::uint64_t seed = 0;
};

int run_encode(const PipelineArgs& a) {
    GrsCode code = load_code_file(a.code_file);
    GeneratorKind kind = generator_kind_from_string(a.gen);
    std::vector<Rat> u = read_symbols_file(a.in_file);
    RatMatrix g = generator(code, kind);
    std::vector<Rat> c = row_times_matrix(u, g);
    write_symbols_file(a.out_file, c);

    std::map<std::string, std::size_t> measured;
    measured["u"] = bitwidth(u);
    measured["G"] = bitwidth(g);
    measured["c"] = bitwidth(c);
    BoundInputs in = bound_inputs_for(code, 0, measured["u"], 0);
    GrowthReport report = conformance_check(measured, in, code.preset, kind, false, code.distance());
    emit(a.report_file, report.to_kv_text());
    return kExitOk;
}

int run_corrupt(const PipelineArgs& a) {
    GrsCode code = load_code_file(a.code_file);
    std::vector<Rat> c = read_symbols_file(a.in_file);
    if (c.size() != code.n) throw std::invalid_argument("input word length must be n");
    ErrorPattern pattern;
    if (!a.errors_file.empty()) {
        std::vector<Rat> e = read_symbols_file(a.errors_file);
        if (e.size() != code.n) throw std::invalid_argument("error vector length must be n");
        pattern = ErrorPattern::from_vector(e);
    } else {
        Rng rng(a.seed);
        pattern = sample_error_pattern(code.n, a.tau, a.error_bits, rng);
    }
    std::vector<Rat> r = corrupt(c, pattern);
    write_symbols_file(a.out_file, r);
    if (!a.err_file.empty()) write_symbols_file(a.err_file, pattern.to_vector(code.n));
    return kExitOk;
}

int run_decode(const PipelineArgs& a) {
    GrsCode code = load_code_file(a.code_file);
    std::vector<Rat> r = read_symbols_file(a.in_file);
    DecodeOutcome out = decode(code, r);
    write_symbols_file(a.out_file, out.codeword);
    if (!a.err_file.empty()) write_symbols_file(a.err_file, out.error);
    emit(a.report_file, out.report.to_kv_text());
    return kExitOk;
}

struct StatsArgs {
    ExperimentConfig cfg;
    std::string n_list;
    std::optional<std::size_t> k;
    bool rate_third = false;
    bool tau_max = false;
    std::string alphas = "min";
    std::string alpha_list;
    std::string preset = "vprime1";
    std::string gen = "vandermonde";
    std::string out;
    bool no_summary = false;
};

ExperimentConfig build_config(StatsArgs& a) {
    ExperimentConfig cfg = a.cfg;
    for (const Rat& x : parse_rational_list(a.n_list)) {
        if (!x.is_integer() || x.sign() <= 0)
            throw std::invalid_argument("--n-list needs positive integers");
        cfg.n_values.push_back(static_cast<std::size_t>(x.num().get_ui()));
    }
    if (cfg.n_values.empty()) throw std::invalid_argument("--n-list is required");
    if (a.k && a.rate_third) throw std::invalid_argument("give --k or --rate-third, not both");
    cfg.fixed_k = a.k;
    cfg.tau_max = a.tau_max;
    cfg.alpha_choice = alpha_choice_from_string(a.alphas);
    if (cfg.alpha_choice == AlphaChoice::Custom)
        cfg.custom_alphas = parse_rational_list(a.alpha_list);
    cfg.preset = preset_from_string(a.preset);
    cfg.gen = generator_kind_from_string(a.gen);
    return cfg;
}

int run_stats_cmd(StatsArgs& a) {
    ExperimentConfig cfg = build_config(a);
    std::vector<StatRow> rows = run_stats(cfg);
    std::ostringstream os;
    write_stats_csv(os, rows, !a.no_summary);
    emit(a.out, os.str());
    return kExitOk;
}

int run_trend_cmd(StatsArgs& a, double slope_limit) {
    ExperimentConfig cfg = build_config(a);
    std::vector<TrendPoint> points = run_runtime_trend(cfg);
    std::ostringstream os;
    write_trend_csv(os, points);
    emit(a.out, os.str());
    bool ok = trend_within_slope(points, slope_limit);
    std::cerr << "log-log slope limit " << slope_limit << ": " << (ok ? "ok" : "exceeded") << "\n";
    return ok ? kExitOk : 1;
}

struct BoundsArgs {
    BoundInputs in;
    std::size_t lambda_s = 1;
    std::size_t lambda_g = 0;
    std::size_t lambda_h = 0;
};

int run_bounds(const BoundsArgs& a) {
    const BoundInputs& in = a.in;
    const std::size_t d = in.n - in.k + 1;
    auto cell = [&](Preset p, int which) {
        switch (which) {
            case 0: return bound_generator_vandermonde(in, p);
            case 1: return bound_generator_cauchy(in, p);
            default: return bound_parity_check(in, p);
        }
    };
    std::ostringstream os;
    os << "inputs: n=" << in.n << " k=" << in.k << " d=" << d << " tau=" << in.tau
       << " lambda(alpha)=" << in.lambda_alpha << " lambda(v)=" << in.lambda_v
       << " lambda(v')=" << in.lambda_v_prime << " lambda(u)=" << in.lambda_u
       << " lambda(e)=" << in.lambda_e << "\n\n";
    os << "matrix bit-width bounds\n";
    os << "  preset       lambda(G_GRS)  lambda(G_Cauchy)  lambda(H_GRS)\n";
    for (Preset p : {Preset::Custom, Preset::VPrimeOne, Preset::CauchyUnit, Preset::VOne}) {
        char line[128];
        std::snprintf(line, sizeof(line), "  %-12s %13zu  %16zu  %13zu\n",
                      p == Preset::Custom ? "general" : std::string(to_string(p)).c_str(),
                      cell(p, 0), cell(p, 1), cell(p, 2));
        os << line;
    }
    os << "\ncodeword bounds, k(lambda(u) + lambda(G) + 1)\n";
    if (a.lambda_g > 0)
        os << "  with measured lambda(G)=" << a.lambda_g << ": " << bound_codeword(in, a.lambda_g)
           << "\n";
    for (Preset p : {Preset::CauchyUnit, Preset::VOne}) {
        os << "  " << to_string(p) << ": G_GRS "
           << bound_codeword_case(in, p, GeneratorKind::Vandermonde) << ", G_Cauchy "
           << bound_codeword_case(in, p, GeneratorKind::CauchySystematic) << "\n";
    }
    os << "\nsyndrome bounds\n";
    if (a.lambda_h > 0)
        os << "  with measured lambda(H)=" << a.lambda_h << ": rational "
           << bound_syndrome(in, a.lambda_h, false) << ", integer H "
           << bound_syndrome(in, a.lambda_h, true) << "\n";
    for (Preset p : {Preset::CauchyUnit, Preset::VOne}) {
        os << "  " << to_string(p) << ": rational " << bound_syndrome_case(in, p, false)
           << ", integer H " << bound_syndrome_case(in, p, true);
        if (p == Preset::CauchyUnit)
            os << "  (table variant: rational " << bound_syndrome_case_composed(in, p, false)
               << ", integer H " << bound_syndrome_case_composed(in, p, true) << ")";
        os << "\n";
    }
    os << "\ndecoder polynomial bounds\n";
    os << "  lambda(xi S) <= d(lambda(s)+1) = " << bound_eea_input(d, a.lambda_s)
       << "  [lambda(s)=" << a.lambda_s << "]\n";
    os << "  lambda(Lambda) <= " << bound_locator_poly(in.tau, in.lambda_alpha) << "\n";
    os << "  lambda(Omega) <= " << bound_evaluator_poly(in) << "\n";
    std::cout << os.str();
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact generalized Reed-Solomon codec over the rationals"};
    app.require_subcommand(1);

    MkcodeArgs mk;
    CLI::App* mkcode = app.add_subcommand("mkcode", "construct a code and write its spec file");
    mkcode->add_option("--n", mk.n, "code length")->required();
    mkcode->add_option("--k", mk.k, "code dimension")->required();
    mkcode->add_option("--alphas", mk.alphas, "locator choice: min|1..n|custom");
    mkcode->add_option("--alpha-list", mk.alpha_list, "comma-separated locators for --alphas custom");
    mkcode->add_option("--preset", mk.preset, "vprime1|cauchyunit|v1|custom");
    mkcode->add_option("--v-list", mk.v_list, "custom v multipliers");
    mkcode->add_option("--vprime-list", mk.vprime_list, "custom v' multipliers");
    mkcode->add_option("--out", mk.out, "output code file ('-' = stdout)");

    PipelineArgs enc;
    CLI::App* encode_cmd = app.add_subcommand("encode", "encode an information word");
    encode_cmd->add_option("--code", enc.code_file, "code file")->required();
    encode_cmd->add_option("--in", enc.in_file, "information word, one rational per line")
        ->required();
    encode_cmd->add_option("--out", enc.out_file, "codeword output")->required();
    encode_cmd->add_option("--gen", enc.gen, "vandermonde|cauchy");
    encode_cmd->add_option("--report", enc.report_file, "growth report output ('-' = stdout)");

    PipelineArgs cor;
    CLI::App* corrupt_cmd = app.add_subcommand("corrupt", "add an error vector to a codeword");
    corrupt_cmd->add_option("--code", cor.code_file, "code file")->required();
    corrupt_cmd->add_option("--in", cor.in_file, "codeword input")->required();
    corrupt_cmd->add_option("--out", cor.out_file, "received word output")->required();
    corrupt_cmd->add_option("--errors", cor.errors_file, "explicit length-n error vector");
    corrupt_cmd->add_option("--tau", cor.tau, "number of random errors");
    corrupt_cmd->add_option("--error-bits", cor.error_bits, "bit width of random error values");
    corrupt_cmd->add_option("--seed", cor.seed, "random seed");
    corrupt_cmd->add_option("--err-out", cor.err_file, "write the applied error vector");

    PipelineArgs dec;
    CLI::App* decode_cmd = app.add_subcommand("decode", "decode a received word");
    decode_cmd->add_option("--code", dec.code_file, "code file")->required();
    decode_cmd->add_option("--in", dec.in_file, "received word input")->required();
    decode_cmd->add_option("--out", dec.out_file, "decoded codeword output")->required();
    decode_cmd->add_option("--err-out", dec.err_file, "decoded error vector output");
    decode_cmd->add_option("--report", dec.report_file, "growth report output ('-' = stdout)");

    StatsArgs st;
    CLI::App* stats_cmd = app.add_subcommand("stats", "codeword growth statistics as CSV");
    auto add_experiment_flags = [](CLI::App* cmd, StatsArgs& a) {
        cmd->add_option("--trials", a.cfg.trials, "trials per n");
        cmd->add_option("--n-list", a.n_list, "comma-separated code lengths")->required();
        cmd->add_option("--k", a.k, "fixed dimension");
        cmd->add_flag("--rate-third", a.rate_third, "k = floor(n/3) (default)");
        cmd->add_option("--info-bits", a.cfg.info_bits, "information symbol bit width");
        cmd->add_option("--error-bits", a.cfg.error_bits, "error value bit width");
        cmd->add_option("--tau", a.cfg.tau, "errors per trial (0 = encode only)");
        cmd->add_flag("--tau-max", a.tau_max, "use the full decoding radius");
        cmd->add_option("--alphas", a.alphas, "min|1..n|custom");
        cmd->add_option("--alpha-list", a.alpha_list, "locators for --alphas custom");
        cmd->add_option("--preset", a.preset, "vprime1|cauchyunit|v1");
        cmd->add_option("--gen", a.gen, "vandermonde|cauchy");
        cmd->add_option("--seed", a.cfg.seed, "random seed");
        cmd->add_option("--out", a.out, "CSV output ('-' = stdout)");
    };
    add_experiment_flags(stats_cmd, st);
    stats_cmd->add_flag("--no-summary", st.no_summary, "omit per-n mean rows");

    StatsArgs tr;
    double slope_limit = 9.0;
    CLI::App* trend_cmd = app.add_subcommand("runtime-trend", "decode wall-time trend over n");
    add_experiment_flags(trend_cmd, tr);
    trend_cmd->add_option("--slope-limit", slope_limit, "max log-log slope per doubling");

    BoundsArgs bd;
    CLI::App* bounds_cmd = app.add_subcommand("bounds", "evaluate the bit-width bound tables");
    bounds_cmd->add_option("--n", bd.in.n, "code length")->required();
    bounds_cmd->add_option("--k", bd.in.k, "code dimension")->required();
    bounds_cmd->add_option("--tau", bd.in.tau, "error weight");
    bounds_cmd->add_option("--lambda-alpha", bd.in.lambda_alpha, "lambda(alpha)")->required();
    bounds_cmd->add_option("--lambda-v", bd.in.lambda_v, "lambda(v)");
    bounds_cmd->add_option("--lambda-vprime", bd.in.lambda_v_prime, "lambda(v')");
    bounds_cmd->add_option("--lambda-u", bd.in.lambda_u, "lambda(u)");
    bounds_cmd->add_option("--lambda-e", bd.in.lambda_e, "lambda(e)");
    bounds_cmd->add_option("--lambda-s", bd.lambda_s, "measured lambda(s)");
    bounds_cmd->add_option("--lambda-g", bd.lambda_g, "measured lambda(G)");
    bounds_cmd->add_option("--lambda-h", bd.lambda_h, "measured lambda(H)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (mkcode->parsed()) return run_mkcode(mk);
        if (encode_cmd->parsed()) return run_encode(enc);
        if (corrupt_cmd->parsed()) return run_corrupt(cor);
        if (decode_cmd->parsed()) return run_decode(dec);
        if (stats_cmd->parsed()) return run_stats_cmd(st);
        if (trend_cmd->parsed()) return run_trend_cmd(tr, slope_limit);
        if (bounds_cmd->parsed()) return run_bounds(bd);
    } catch (const grsq::DecodeFailure& e) {
        std::cerr << "decode failure: " << e.what() << "\n";
        return kExitDecodeFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
    return kExitConfig;
}
