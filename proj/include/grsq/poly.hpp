#pragma once

#include <span>
#include <utility>
#include <vector>

#include "grsq/rat.hpp"

namespace grsq {

/// Dense univariate polynomial over Rat. Coefficients are stored from degree
/// 0 upward with a nonzero leading coefficient; the zero polynomial has no
/// coefficients and degree -1 (standing in for -infinity).
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rat> coeffs);

    static RatPoly constant(Rat c);
    /// coeff * x^degree
    static RatPoly monomial(Rat coeff, std::size_t degree);

    int deg() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    std::span<const Rat> coeffs() const { return c_; }
    /// Coefficient of x^i; zero beyond the degree.
    Rat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rat(); }
    const Rat& leading() const;

    /// Exact evaluation by Horner's scheme: deg(p) multiplications and
    /// additions.
    Rat eval(const Rat& x) const;
    RatPoly derivative() const;
    /// Coefficients of x^0 .. x^(len-1), i.e. the polynomial mod x^len.
    RatPoly truncated(std::size_t len) const;
    RatPoly scaled(const Rat& c) const;

    friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator-(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator*(const RatPoly& a, const RatPoly& b);

    friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const RatPoly& a, const RatPoly& b) { return a.c_ != b.c_; }

private:
    void trim();
    std::vector<Rat> c_;
};

/// Division with remainder: a = q*b + r with deg r < deg b. Throws
/// std::domain_error when b is zero.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);

}  // namespace grsq
