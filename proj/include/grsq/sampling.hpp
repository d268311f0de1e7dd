#pragma once

#include <cstdint>
#include <random>

#include "grsq/codec.hpp"
#include "grsq/rat.hpp"

namespace grsq {

/// Seeded deterministic generator. Built on std::mt19937_64, whose output
/// stream is pinned by the standard, with hand-rolled rejection sampling so
/// streams are identical across platforms and compilers.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }
    bool coin() { return (next() & 1) != 0; }
    /// Unbiased uniform draw from [0, bound).
    std::uint64_t below(std::uint64_t bound);
    /// Uniform integer in [0, 2^bits).
    mpz_class uniform_bits(std::size_t bits);

private:
    std::mt19937_64 gen_;
};

/// Stream seed for (experiment seed, n, trial); parallel and serial trial
/// execution draw from identical streams.
std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t n, std::uint64_t trial);

/// Numerator uniform over nonzero integers of magnitude < 2^t, denominator
/// uniform over 1 .. 2^t - 1, then reduced, so bitwidth(result) <= t.
/// Never returns zero. Requires t >= 1.
Rat sample_rational(std::size_t max_bitwidth, Rng& rng);

/// weight distinct positions in [0, n), each with a nonzero value of bit
/// width at most value_bits.
ErrorPattern sample_error_pattern(std::size_t n, std::size_t weight, std::size_t value_bits,
                                  Rng& rng);

}  // namespace grsq
