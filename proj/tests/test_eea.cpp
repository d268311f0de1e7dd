#include <doctest.h>

#include "grsq/bitwidth.hpp"
#include "grsq/eea.hpp"
#include "grsq/sampling.hpp"

using namespace grsq;

namespace {

RatPoly random_int_poly(Rng& rng, int deg, std::size_t bits) {
    std::vector<Rat> c(static_cast<std::size_t>(deg) + 1);
    for (Rat& x : c) {
        mpz_class z = rng.uniform_bits(bits);
        if (rng.coin()) z = -z;
        x = Rat(z);
    }
    if (c.back().is_zero()) c.back() = Rat(1);
    return RatPoly(std::move(c));
}

bool divides(const RatPoly& d, const RatPoly& a) {
    return divmod(a, d).second.is_zero();
}

// equal up to a nonzero scalar factor
bool proportional(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    if (a.deg() != b.deg()) return false;
    return a.scaled(a.leading().inv()) == b.scaled(b.leading().inv());
}

}  // namespace

TEST_CASE("stopped EEA worked examples") {
    RatPoly x2 = RatPoly::monomial(Rat(1), 2);
    SUBCASE("x^2, x") {
        EeaTriple h = eea_with_stop(x2, RatPoly::monomial(Rat(1), 1), Rat(1));
        CHECK(h.r.is_zero());
        CHECK(h.s == RatPoly::constant(Rat(1)));
        CHECK(h.t == RatPoly({Rat(0), Rat(-1)}));
    }
    SUBCASE("x^2, -6x-3") {
        EeaTriple h = eea_with_stop(x2, RatPoly({Rat(-3), Rat(-6)}), Rat(1));
        CHECK(h.r == RatPoly::constant(Rat(1, 4)));
        CHECK(h.s == RatPoly::constant(Rat(1)));
        CHECK(h.t == RatPoly({Rat(-1, 12), Rat(1, 6)}));
    }
}

TEST_CASE("stopped EEA rejects bad inputs") {
    RatPoly x2 = RatPoly::monomial(Rat(1), 2);
    RatPoly x3 = RatPoly::monomial(Rat(1), 3);
    CHECK_THROWS_AS(eea_with_stop(x2, x3, Rat(1)), std::invalid_argument);       // deg a < deg b
    CHECK_THROWS_AS(eea_with_stop(x3, x2, Rat(3)), std::invalid_argument);       // t_stop > deg b
    CHECK_THROWS_AS(eea_with_stop(RatPoly(), x2, Rat(0)), std::invalid_argument);
    CHECK_THROWS_AS(eea_with_stop(x2, RatPoly(), Rat(0)), std::invalid_argument);
}

TEST_CASE("equal inputs take one step") {
    RatPoly a({Rat(2), Rat(0), Rat(4)});
    EeaTriple h = eea_with_stop(a, a, Rat(2));
    CHECK(h.r.is_zero());
    CHECK(h.s == RatPoly::constant(Rat(1)));
    CHECK(h.t == RatPoly::constant(Rat(-1)));
}

TEST_CASE("trace rows satisfy r = s a + t b with strictly dropping degree") {
    Rng rng(41);
    for (int i = 0; i < 100; ++i) {
        int da = 1 + static_cast<int>(rng.below(9));
        int db = static_cast<int>(rng.below(static_cast<std::uint64_t>(da) + 1));
        RatPoly a = random_int_poly(rng, da, 12);
        RatPoly b = random_int_poly(rng, db, 12);
        std::vector<EeaTriple> rows = eea_trace(a, b);
        REQUIRE(rows.size() >= 2);
        CHECK(rows.back().r.is_zero());
        for (std::size_t j = 0; j < rows.size(); ++j) {
            CHECK(rows[j].s * a + rows[j].t * b == rows[j].r);
            if (j >= 2 && !rows[j].r.is_zero()) CHECK(rows[j].r.deg() < rows[j - 1].r.deg());
        }
        // the returned triple honors the degree bracket
        Rat t_stop(static_cast<long>(rng.below(static_cast<std::uint64_t>(b.deg()) + 1)));
        EeaTriple h = eea_with_stop(a, b, t_stop);
        CHECK((h.r.is_zero() || Rat(static_cast<long>(h.r.deg())) < t_stop));
        CHECK(h.s * a + h.t * b == h.r);
    }
}

TEST_CASE("t_stop = 0 lands on an associate of the gcd") {
    Rng rng(42);
    for (int i = 0; i < 60; ++i) {
        RatPoly g = random_int_poly(rng, static_cast<int>(rng.below(3)), 6);
        RatPoly p = random_int_poly(rng, 1 + static_cast<int>(rng.below(4)), 6);
        RatPoly q = random_int_poly(rng, static_cast<int>(rng.below(3)), 6);
        RatPoly a = g * p, b = g * q;
        if (a.deg() < b.deg()) std::swap(a, b);
        if (b.is_zero()) continue;
        std::vector<EeaTriple> rows = eea_trace(a, b);
        const EeaTriple& last = rows[rows.size() - 2];  // last nonzero remainder
        // divides both inputs and is a Bezout combination, hence a gcd
        CHECK(divides(last.r, a));
        CHECK(divides(last.r, b));
        CHECK(last.s * a + last.t * b == last.r);
        CHECK(divides(g, last.r));  // the planted common factor survives
    }
}

TEST_CASE("fraction-free cofactor path matches the classical cofactor up to scale") {
    Rng rng(43);
    for (int i = 0; i < 120; ++i) {
        int da = 2 + static_cast<int>(rng.below(10));
        int db = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(da)));
        RatPoly a = random_int_poly(rng, da, 16);
        RatPoly b = random_int_poly(rng, db, 16);
        Rat t_stop(static_cast<long>(1 + rng.below(static_cast<std::uint64_t>(b.deg()))));
        EeaTriple classical = eea_with_stop(a, b, t_stop);

        std::vector<mpz_class> za(a.coeffs().size()), zb(b.coeffs().size());
        for (std::size_t j = 0; j < za.size(); ++j) za[j] = a.coeffs()[j].num();
        for (std::size_t j = 0; j < zb.size(); ++j) zb[j] = b.coeffs()[j].num();
        std::vector<mpz_class> t_scaled = detail::eea_stop_cofactor_scaled(za, zb, t_stop);
        std::vector<Rat> t_rat(t_scaled.size());
        for (std::size_t j = 0; j < t_scaled.size(); ++j) t_rat[j] = Rat(t_scaled[j]);
        CHECK(proportional(classical.t, RatPoly(std::move(t_rat))));
    }
}
