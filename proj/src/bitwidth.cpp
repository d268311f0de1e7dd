#include "grsq/bitwidth.hpp"

#include <algorithm>

namespace grsq {

std::size_t bitwidth(const mpz_class& a) {
    if (a == 0) return 0;
    return mpz_sizeinbase(a.get_mpz_t(), 2);
}

std::size_t bitwidth(long a) {
    return bitwidth(mpz_class(a));
}

std::size_t bitwidth(const Rat& a) {
    return std::max(bitwidth(a.num()), bitwidth(a.den()));
}

std::size_t bitwidth(const RatPoly& a) {
    if (a.is_zero()) return 0;
    mpz_class b(1);
    for (const Rat& c : a.coeffs()) mpz_lcm(b.get_mpz_t(), b.get_mpz_t(), c.den().get_mpz_t());
    std::vector<mpz_class> nums;
    nums.reserve(a.coeffs().size());
    mpz_class g(b);
    for (const Rat& c : a.coeffs()) {
        nums.push_back(c.num() * (b / c.den()));
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), nums.back().get_mpz_t());
    }
    // With reduced coefficients g is already 1; dividing keeps the
    // representation canonical for any input.
    std::size_t w = bitwidth(mpz_class(b / g));
    for (const mpz_class& n : nums) w = std::max(w, bitwidth(mpz_class(n / g)));
    return w;
}

std::size_t bitwidth(const RatMatrix& a) {
    return bitwidth(a.entries());
}

std::size_t bitwidth(std::span<const Rat> v) {
    std::size_t w = 0;
    for (const Rat& x : v) w = std::max(w, bitwidth(x));
    return w;
}

}  // namespace grsq
