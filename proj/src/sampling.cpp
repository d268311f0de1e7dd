#include "grsq/sampling.hpp"

#include <algorithm>
#include <stdexcept>

namespace grsq {

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("empty range");
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
        x = next();
    } while (x >= limit);
    return x % bound;
}

mpz_class Rng::uniform_bits(std::size_t bits) {
    if (bits == 0) return 0;
    std::size_t words = (bits + 63) / 64;
    std::vector<std::uint64_t> buf(words);
    for (std::uint64_t& w : buf) w = next();
    if (bits % 64 != 0) buf.back() &= (std::uint64_t(1) << (bits % 64)) - 1;
    mpz_class z;
    mpz_import(z.get_mpz_t(), buf.size(), -1 /*lsw first*/, sizeof(std::uint64_t), 0, 0, buf.data());
    return z;
}

std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t n, std::uint64_t trial) {
    // splitmix64 finalizer over the mixed words
    auto mix = [](std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    };
    return mix(mix(mix(seed) ^ n) ^ trial);
}

Rat sample_rational(std::size_t max_bitwidth, Rng& rng) {
    if (max_bitwidth == 0) throw std::invalid_argument("need max_bitwidth >= 1");
    mpz_class num;
    do {
        num = rng.uniform_bits(max_bitwidth);
    } while (num == 0);
    if (rng.coin()) num = -num;
    mpz_class den;
    do {
        den = rng.uniform_bits(max_bitwidth);
    } while (den == 0);
    return Rat(num, den);
}

ErrorPattern sample_error_pattern(std::size_t n, std::size_t weight, std::size_t value_bits,
                                  Rng& rng) {
    if (weight > n) throw std::invalid_argument("error weight exceeds length");
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    for (std::size_t i = 0; i < weight; ++i)
        std::swap(idx[i], idx[i + rng.below(n - i)]);
    idx.resize(weight);
    std::sort(idx.begin(), idx.end());
    ErrorPattern p;
    p.positions = std::move(idx);
    p.values.reserve(weight);
    for (std::size_t i = 0; i < weight; ++i) p.values.push_back(sample_rational(value_bits, rng));
    return p;
}

}  // namespace grsq
