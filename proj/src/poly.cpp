#include "grsq/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace grsq {

RatPoly::RatPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) {
    trim();
}

void RatPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

RatPoly RatPoly::constant(Rat c) {
    RatPoly p;
    if (!c.is_zero()) p.c_.push_back(std::move(c));
    return p;
}

RatPoly RatPoly::monomial(Rat coeff, std::size_t degree) {
    RatPoly p;
    if (!coeff.is_zero()) {
        p.c_.assign(degree + 1, Rat());
        p.c_.back() = std::move(coeff);
    }
    return p;
}

const Rat& RatPoly::leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
}

Rat RatPoly::eval(const Rat& x) const {
    Rat acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

RatPoly RatPoly::derivative() const {
    if (c_.size() <= 1) return RatPoly();
    std::vector<Rat> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = Rat(static_cast<long>(i)) * c_[i];
    return RatPoly(std::move(d));
}

RatPoly RatPoly::truncated(std::size_t len) const {
    if (c_.size() <= len) return *this;
    return RatPoly(std::vector<Rat>(c_.begin(), c_.begin() + static_cast<long>(len)));
}

RatPoly RatPoly::scaled(const Rat& c) const {
    if (c.is_zero()) return RatPoly();
    std::vector<Rat> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] = c_[i] * c;
    return RatPoly(std::move(out));
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
    std::vector<Rat> out(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (i < a.c_.size()) out[i] += a.c_[i];
        if (i < b.c_.size()) out[i] += b.c_[i];
    }
    return RatPoly(std::move(out));
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) {
    std::vector<Rat> out(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (i < a.c_.size()) out[i] += a.c_[i];
        if (i < b.c_.size()) out[i] -= b.c_[i];
    }
    return RatPoly(std::move(out));
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return RatPoly();
    std::vector<Rat> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return RatPoly(std::move(out));
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rat> rem(a.coeffs().begin(), a.coeffs().end());
    int db = b.deg();
    int dr = static_cast<int>(rem.size()) - 1;
    if (dr < db) return {RatPoly(), a};
    std::vector<Rat> quot(static_cast<std::size_t>(dr - db) + 1);
    Rat lb_inv = b.leading().inv();
    for (int i = dr; i >= db; --i) {
        Rat& top = rem[static_cast<std::size_t>(i)];
        if (top.is_zero()) continue;
        Rat q = top * lb_inv;
        for (int j = 0; j < db; ++j)
            rem[static_cast<std::size_t>(i - db + j)] -= q * b.coeffs()[static_cast<std::size_t>(j)];
        top = Rat();
        quot[static_cast<std::size_t>(i - db)] = std::move(q);
    }
    return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

}  // namespace grsq
