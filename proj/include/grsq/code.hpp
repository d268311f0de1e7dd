#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "grsq/matrix.hpp"
#include "grsq/rat.hpp"

namespace grsq {

/// Column-multiplier presets. VPrimeOne sets v' = 1, v = w; VOne sets v = 1,
/// v' = w; CauchyUnit picks v so that the systematic generator's Cauchy block
/// becomes 1/(alpha_i - alpha_{j+k}); Custom takes one of v, v' and derives
/// the other from w.
enum class Preset { VPrimeOne, CauchyUnit, VOne, Custom };

enum class GeneratorKind { Vandermonde, CauchySystematic };

std::string_view to_string(Preset p);
std::string_view to_string(GeneratorKind k);
Preset preset_from_string(std::string_view s);
GeneratorKind generator_kind_from_string(std::string_view s);

/// A generalized Reed-Solomon code over Q: length n, dimension k, distinct
/// nonzero locators alpha_i, parity-check multipliers v_i and generator
/// multipliers v'_i with v_i * v'_i = w_i = prod_{j != i} (alpha_i -
/// alpha_j)^{-1}. Immutable after construction; d = n - k + 1 is derived.
struct GrsCode {
    std::size_t n = 0;
    std::size_t k = 0;
    std::vector<Rat> alphas;
    std::vector<Rat> v;
    std::vector<Rat> v_prime;
    Preset preset = Preset::Custom;

    std::size_t distance() const { return n - k + 1; }
    /// Decoding radius floor((d-1)/2).
    std::size_t radius() const { return (n - k) / 2; }
};

/// Level of a locator: max(|num|, den). The number of distinct nonzero
/// reduced rationals with level <= l is 4 * sum_{i=1..l} phi(i) - 2.
mpz_class locator_level(const Rat& x);

/// The first n nonzero reduced rationals ordered by increasing level, within
/// a level by increasing absolute value with the positive sign first:
/// 1, -1, 1/2, -1/2, 2, -2, 1/3, -1/3, 2/3, ...
std::vector<Rat> enumerate_min_locators(std::size_t n);

/// w_i = prod_{j != i} (alpha_i - alpha_j)^{-1}. Locators must be distinct.
std::vector<Rat> weights(std::span<const Rat> alphas);

GrsCode make_code(std::size_t n, std::size_t k, std::vector<Rat> alphas, Preset preset);
/// Custom preset from a user-supplied v; derives v' = w / v.
GrsCode make_code_with_v(std::size_t n, std::size_t k, std::vector<Rat> alphas, std::vector<Rat> v);
/// Custom preset from a user-supplied v'; derives v = w / v'.
GrsCode make_code_with_v_prime(std::size_t n, std::size_t k, std::vector<Rat> alphas,
                               std::vector<Rat> v_prime);

/// k x n generator with G[j][i] = alpha_i^j * v'_i.
RatMatrix generator_vandermonde(const GrsCode& code);
/// (n-k) x n parity check with H[r][i] = alpha_i^r * v_i.
RatMatrix parity_check(const GrsCode& code);
/// Systematic k x n generator (I | A) with the Cauchy block
/// A[i][j] = c_i * d_j / (a_i - b_j).
RatMatrix generator_cauchy(const GrsCode& code);
RatMatrix generator(const GrsCode& code, GeneratorKind kind);

/// True iff sum_i alpha_i^r * v_i * v'_i = 0 for all r = 0, ..., n-2.
bool verify_system_eq1(const GrsCode& code);

}  // namespace grsq
