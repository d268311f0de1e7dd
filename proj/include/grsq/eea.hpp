#pragma once

#include <gmpxx.h>

#include <vector>

#include "grsq/poly.hpp"
#include "grsq/rat.hpp"

namespace grsq {

/// One row of the extended Euclidean remainder sequence: r = s*a + t*b for
/// the inputs a, b that produced it.
struct EeaTriple {
    RatPoly r, s, t;
};

/// Classical extended Euclidean algorithm over Q[x] with stopping condition:
/// from r_{-1} = a, r_0 = b produces remainders of strictly decreasing degree
/// with cofactors r_i = s_i*a + t_i*b and returns the unique triple with
/// deg r_h < t_stop <= deg r_{h-1} (zero polynomial counting as degree
/// -infinity). Requires a, b nonzero, deg a >= deg b and t_stop <= deg b;
/// violations raise std::invalid_argument.
EeaTriple eea_with_stop(const RatPoly& a, const RatPoly& b, const Rat& t_stop);

/// Full remainder sequence starting at (a, 1, 0), (b, 0, 1) and ending with
/// the first zero remainder.
std::vector<EeaTriple> eea_trace(const RatPoly& a, const RatPoly& b);

namespace detail {

/// Nonzero scalar multiple of the stopped-EEA cofactor t_h for integer
/// inputs, computed by a fraction-free remainder sequence: the (r, t) row
/// pair is transported jointly over Z and divided by its joint content each
/// step, which keeps the pair proportional to the classical one. Used by the
/// key-equation solver, where t_h only matters up to scale.
std::vector<mpz_class> eea_stop_cofactor_scaled(const std::vector<mpz_class>& a,
                                                const std::vector<mpz_class>& b,
                                                const Rat& t_stop);

}  // namespace detail

}  // namespace grsq
