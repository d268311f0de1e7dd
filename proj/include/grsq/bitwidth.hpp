#pragma once

#include <gmpxx.h>

#include <span>
#include <vector>

#include "grsq/matrix.hpp"
#include "grsq/poly.hpp"
#include "grsq/rat.hpp"

namespace grsq {

/// Bit width of an integer: floor(log2|a|) + 1 for a != 0, and 0 for a = 0.
std::size_t bitwidth(const mpz_class& a);
std::size_t bitwidth(long a);

/// Bit width of a rational: max of numerator and denominator widths of the
/// reduced form. Note that integers stored as n/1 pick up the denominator's
/// width, so bitwidth(Rat(0)) = 1 while bitwidth(mpz 0) = 0.
std::size_t bitwidth(const Rat& a);

/// Bit width of a polynomial over the canonical common-denominator form
/// sum (a_i/b) x^i with gcd(a_0, ..., a_n, b) = 1: the max width over the
/// scaled numerators and b. The zero polynomial has width 0.
std::size_t bitwidth(const RatPoly& a);

/// Bit width of a matrix or vector: max width over the rational entries.
std::size_t bitwidth(const RatMatrix& a);
std::size_t bitwidth(std::span<const Rat> v);
inline std::size_t bitwidth(const std::vector<Rat>& v) {
    return bitwidth(std::span<const Rat>(v));
}

}  // namespace grsq
