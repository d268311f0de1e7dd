#include "grsq/bounds.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "grsq/bitwidth.hpp"

namespace grsq {

BoundInputs bound_inputs_for(const GrsCode& code, std::size_t tau, std::size_t lambda_u,
                             std::size_t lambda_e) {
    BoundInputs in;
    in.n = code.n;
    in.k = code.k;
    in.tau = tau;
    in.lambda_alpha = bitwidth(code.alphas);
    in.lambda_v = bitwidth(code.v);
    in.lambda_v_prime = bitwidth(code.v_prime);
    in.lambda_u = lambda_u;
    in.lambda_e = lambda_e;
    return in;
}

std::size_t bound_generator_vandermonde(const BoundInputs& in, Preset preset) {
    const std::size_t k = in.k, n = in.n, la = in.lambda_alpha;
    switch (preset) {
        case Preset::VPrimeOne: return (k - 1) * la;
        case Preset::CauchyUnit: return (k - 1) * (3 * la + 1);
        case Preset::VOne: return (2 * n + k - 3) * la + n - 1;
        case Preset::Custom: return (k - 1) * la + in.lambda_v_prime;
    }
    throw std::logic_error("unreachable");
}

std::size_t bound_generator_cauchy(const BoundInputs& in, Preset preset) {
    const std::size_t k = in.k, n = in.n, la = in.lambda_alpha;
    switch (preset) {
        case Preset::VPrimeOne: return 2 * (k - 1) * (2 * la + 1);
        case Preset::CauchyUnit: return 2 * la + 1;
        case Preset::VOne: return (2 * n - 2 * k + 1) * (2 * la + 1);
        case Preset::Custom: return 2 * (2 * k - 1) * la + 2 * in.lambda_v_prime + 2 * k - 1;
    }
    throw std::logic_error("unreachable");
}

std::size_t bound_parity_check(const BoundInputs& in, Preset preset) {
    const std::size_t k = in.k, n = in.n, la = in.lambda_alpha;
    switch (preset) {
        case Preset::VPrimeOne: return (3 * n - k - 3) * la + n - 1;
        case Preset::CauchyUnit: return (3 * (n - k) - 1) * la + (n - k);
        case Preset::VOne: return (n - k - 1) * la;
        case Preset::Custom: return (n - k - 1) * la + in.lambda_v;
    }
    throw std::logic_error("unreachable");
}

std::size_t bound_codeword(const BoundInputs& in, std::size_t lambda_g) {
    return in.k * (in.lambda_u + lambda_g + 1);
}

std::size_t bound_syndrome(const BoundInputs& in, std::size_t lambda_h, bool integer_h) {
    if (integer_h) return (in.tau + 1) * in.lambda_e + lambda_h + in.n;
    return in.tau * (in.lambda_e + lambda_h + 1);
}

std::size_t bound_eea_input(std::size_t d, std::size_t lambda_s) {
    return d * (lambda_s + 1);
}

std::size_t bound_locator_poly(std::size_t tau, std::size_t lambda_alpha) {
    return tau * (lambda_alpha + 2);
}

std::size_t bound_evaluator_poly(const BoundInputs& in) {
    return in.tau * (in.lambda_alpha + in.lambda_e + in.lambda_v + 5);
}

std::size_t bound_syndrome_case(const BoundInputs& in, Preset preset, bool integer_h) {
    const std::size_t n = in.n, k = in.k, la = in.lambda_alpha;
    switch (preset) {
        case Preset::VOne:
            if (integer_h) return (in.tau + 1) * in.lambda_e + (n - k - 1) * la + n;
            return in.tau * (in.lambda_e + (n - k - 1) * la + 1);
        case Preset::CauchyUnit:
            if (integer_h) return (in.tau + 1) * in.lambda_e + 3 * (n - k) * la + 2 * n - k;
            return in.tau * (in.lambda_e + 3 * (n - k) * la + (n - k) + 1);
        default:
            throw std::invalid_argument("syndrome case bound only for v1 / cauchyunit");
    }
}

std::size_t bound_syndrome_case_composed(const BoundInputs& in, Preset preset, bool integer_h) {
    return bound_syndrome(in, bound_parity_check(in, preset), integer_h);
}

std::size_t bound_codeword_case(const BoundInputs& in, Preset preset, GeneratorKind kind) {
    std::size_t lg = kind == GeneratorKind::Vandermonde ? bound_generator_vandermonde(in, preset)
                                                        : bound_generator_cauchy(in, preset);
    return bound_codeword(in, lg);
}

void GrowthReport::recheck() {
    conforms = true;
    for (const auto& [key, bound] : bounds) {
        auto it = measured.find(key);
        if (it != measured.end() && it->second > bound) conforms = false;
    }
}

std::string GrowthReport::to_kv_text() const {
    static const char* order[] = {"u", "e", "G", "H", "c", "s", "xiS", "Lambda", "Omega"};
    std::ostringstream os;
    for (const char* key : order) {
        if (auto it = measured.find(key); it != measured.end())
            os << "measured." << key << " = " << it->second << "\n";
        if (auto it = bounds.find(key); it != bounds.end())
            os << "bound." << key << " = " << it->second << "\n";
    }
    os << "conforms = " << (conforms ? "true" : "false") << "\n";
    return os.str();
}

namespace {

// v'_i for i > k multiplies k difference factors, one more than the printed
// cell accounts for.
std::size_t checked_generator_vandermonde(const BoundInputs& in, Preset preset) {
    if (preset == Preset::CauchyUnit)
        return (in.k - 1) * in.lambda_alpha + in.k * (2 * in.lambda_alpha + 1);
    return bound_generator_vandermonde(in, preset);
}

}  // namespace

GrowthReport conformance_check(const std::map<std::string, std::size_t>& measured,
                               const BoundInputs& in, Preset preset, GeneratorKind kind,
                               bool integer_h, std::size_t d) {
    GrowthReport report;
    report.measured = measured;
    auto have = [&](const char* key) { return measured.count(key) != 0; };
    auto floored = [](std::size_t b) { return std::max<std::size_t>(b, 1); };

    if (have("G"))
        report.bounds["G"] = floored(kind == GeneratorKind::Vandermonde
                                         ? checked_generator_vandermonde(in, preset)
                                         : bound_generator_cauchy(in, preset));
    if (have("H")) report.bounds["H"] = floored(bound_parity_check(in, preset));
    if (have("c") && have("G"))
        report.bounds["c"] = bound_codeword(in, measured.at("G"));
    if (in.tau >= 1) {
        if (have("s") && have("H"))
            report.bounds["s"] = bound_syndrome(in, measured.at("H"), integer_h);
        if (have("xiS") && have("s")) report.bounds["xiS"] = bound_eea_input(d, measured.at("s"));
        if (have("Lambda")) report.bounds["Lambda"] = bound_locator_poly(in.tau, in.lambda_alpha);
        if (have("Omega")) report.bounds["Omega"] = bound_evaluator_poly(in);
    }
    report.recheck();
    return report;
}

}  // namespace grsq
