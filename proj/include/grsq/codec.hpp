#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "grsq/bounds.hpp"
#include "grsq/code.hpp"
#include "grsq/poly.hpp"

namespace grsq {

/// Raised when a received word cannot be decoded within half the minimum
/// distance: the key-equation normalizer vanishes, the locator does not split
/// over the code locators, a Forney division degenerates, or the decoded
/// word fails re-verification.
class DecodeFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Sparse error pattern: strictly increasing 0-based positions with one
/// nonzero value each.
struct ErrorPattern {
    std::vector<std::size_t> positions;
    std::vector<Rat> values;

    static ErrorPattern from_vector(std::span<const Rat> e);
    /// Dense length-n vector; throws std::invalid_argument on an
    /// out-of-range position.
    std::vector<Rat> to_vector(std::size_t n) const;
    std::size_t weight() const { return positions.size(); }
};

/// Key-equation solution: error locator Lambda with Lambda(0) = 1 and error
/// evaluator Omega with deg Omega < deg Lambda.
struct KeyEqSolution {
    RatPoly locator;
    RatPoly evaluator;
};

struct DecodeOutcome {
    std::vector<Rat> codeword;
    std::vector<Rat> error;
    GrowthReport report;
};

/// c = u * G for the chosen generator kind; length(u) must be k.
std::vector<Rat> encode(const GrsCode& code, GeneratorKind kind, std::span<const Rat> u);

/// r_i = c_i + e_i.
std::vector<Rat> corrupt(std::span<const Rat> c, const ErrorPattern& e);

/// s_i = sum_j r_j v_j alpha_j^i for i = 0, ..., d-2 (that is, r H^T).
std::vector<Rat> syndrome(const GrsCode& code, std::span<const Rat> r);

/// S(x) = sum s_i x^i.
RatPoly syndrome_poly(std::span<const Rat> s);

/// Smallest positive integer clearing all denominators of S.
mpz_class common_denominator_xi(const RatPoly& s);

/// Runs the stopped EEA on (xi x^(d-1), xi S) with t_stop = (d-1)/2 and
/// normalizes: Lambda = t_h / t_h(0), Omega = r_h / (xi t_h(0)). Requires S
/// nonzero; throws DecodeFailure when the error weight exceeds the decoding
/// radius (constant term of t_h vanishes or S is shorter than the stop
/// threshold allows).
KeyEqSolution solve_key_equation(const RatPoly& s_poly, std::size_t d);

/// e_i = -(alpha_i / v_i) * Omega(1/alpha_i) / Lambda'(1/alpha_i) at the
/// positions where Lambda(1/alpha_i) = 0, and e_i = 0 elsewhere. A repeated
/// root of Lambda raises DecodeFailure.
std::vector<Rat> forney(const GrsCode& code, const KeyEqSolution& sol);

/// Bounded-minimum-distance decoder: returns the codeword c and error e with
/// r = c + e whenever some codeword lies within floor((d-1)/2) of r, along
/// with the measured-vs-bound growth report of the run. The decoded word is
/// re-verified (zero syndrome, weight within radius) before returning.
DecodeOutcome decode(const GrsCode& code, std::span<const Rat> r);

}  // namespace grsq
