#pragma once

#include <map>
#include <optional>
#include <string>

#include "grsq/code.hpp"

namespace grsq {

/// Inputs to the closed-form bit-width bound formulas.
struct BoundInputs {
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t tau = 0;
    std::size_t lambda_alpha = 0;
    std::size_t lambda_v = 0;
    std::size_t lambda_v_prime = 0;
    std::size_t lambda_u = 0;
    std::size_t lambda_e = 0;
};

/// Measures lambda(alpha), lambda(v), lambda(v') from the code and fills in
/// the run-specific values.
BoundInputs bound_inputs_for(const GrsCode& code, std::size_t tau, std::size_t lambda_u,
                             std::size_t lambda_e);

// Bit-width bound table for the generator/parity-check matrices, one cell per
// multiplier preset (Custom evaluates the general row).
std::size_t bound_generator_vandermonde(const BoundInputs& in, Preset preset);
std::size_t bound_generator_cauchy(const BoundInputs& in, Preset preset);
std::size_t bound_parity_check(const BoundInputs& in, Preset preset);

/// lambda(c) <= k (lambda(u) + lambda(G) + 1)
std::size_t bound_codeword(const BoundInputs& in, std::size_t lambda_g);
/// Rational case tau (lambda(e) + lambda(H) + 1); integer-H case
/// (tau+1) lambda(e) + lambda(H) + n.
std::size_t bound_syndrome(const BoundInputs& in, std::size_t lambda_h, bool integer_h);
/// lambda(xi S) <= d (lambda(s) + 1)
std::size_t bound_eea_input(std::size_t d, std::size_t lambda_s);
/// lambda(Lambda) <= tau (lambda(alpha) + 2)
std::size_t bound_locator_poly(std::size_t tau, std::size_t lambda_alpha);
/// lambda(Omega) <= tau (lambda(alpha) + lambda(e) + lambda(v) + 5)
std::size_t bound_evaluator_poly(const BoundInputs& in);

/// Preset syndrome bounds as printed in the trade-off corollary (VOne and
/// CauchyUnit only); the CauchyUnit rational case reads
/// tau (lambda(e) + 3(n-k) lambda(alpha) + n-k+1).
std::size_t bound_syndrome_case(const BoundInputs& in, Preset preset, bool integer_h);
/// The same cell composed from the parity-check table instead, which gives
/// tau (lambda(e) + (3n-3k-1) lambda(alpha) + n-k+1) for CauchyUnit. The two
/// printed forms differ by lambda(alpha); both are exposed.
std::size_t bound_syndrome_case_composed(const BoundInputs& in, Preset preset, bool integer_h);
/// Codeword cells composed as k (lambda(u) + <matrix cell> + 1).
std::size_t bound_codeword_case(const BoundInputs& in, Preset preset, GeneratorKind kind);

/// Measured widths of an encode/decode run next to the bound set, keyed by
/// quantity name (u, e, G, H, c, s, xiS, Lambda, Omega). conforms is the
/// conjunction of measured <= bound over the keys present in both maps.
struct GrowthReport {
    std::map<std::string, std::size_t> measured;
    std::map<std::string, std::size_t> bounds;
    bool conforms = true;

    void recheck();
    /// Flat key-value serialization, one "measured.X = n" / "bound.X = n"
    /// line per entry plus a final conforms line.
    std::string to_kv_text() const;
};

/// Builds the bound set matching the given code shape and compares. Bounds
/// needing a measured width as input (codeword needs G, syndrome needs H,
/// the EEA input needs s) are only emitted when that width is present. The
/// decoding-side bounds are skipped for tau = 0, where the lemmas do not
/// apply. The generator and parity-check bounds are the table cells made
/// safe for comparison: every matrix cell is floored at 1 (a generator or
/// parity-check matrix always contains a nonzero entry), and the CauchyUnit
/// generator-table cell counts k difference factors for the columns beyond
/// the systematic part, giving (k-1) lambda(alpha) + k (2 lambda(alpha) + 1)
/// instead of the printed (k-1)(3 lambda(alpha) + 1), which undercounts
/// them.
GrowthReport conformance_check(const std::map<std::string, std::size_t>& measured,
                               const BoundInputs& in, Preset preset, GeneratorKind kind,
                               bool integer_h, std::size_t d);

}  // namespace grsq
