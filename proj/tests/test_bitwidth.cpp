#include <doctest.h>

#include "grsq/bitwidth.hpp"

using namespace grsq;

TEST_CASE("integer bit width") {
    CHECK(bitwidth(0L) == 0);
    CHECK(bitwidth(5L) == 3);
    CHECK(bitwidth(-8L) == 4);
    CHECK(bitwidth(1L) == 1);
    CHECK(bitwidth(mpz_class("1267650600228229401496703205376")) == 101);  // 2^100
}

TEST_CASE("rational bit width includes the denominator") {
    CHECK(bitwidth(Rat(0)) == 1);  // max(lambda(0), lambda(1))
    CHECK(bitwidth(Rat(3, 7)) == 3);
    CHECK(bitwidth(Rat(-1)) == 1);
    CHECK(bitwidth(Rat(-8)) == 4);
}

TEST_CASE("polynomial bit width over the common-denominator form") {
    CHECK(bitwidth(RatPoly()) == 0);
    CHECK(bitwidth(RatPoly({Rat(1), Rat(-2)})) == 2);
    // x/6 - 1/12 = (2x - 1)/12
    CHECK(bitwidth(RatPoly({Rat(-1, 12), Rat(1, 6)})) == 4);
    // -3 - 6x has integer coefficients, b = 1
    CHECK(bitwidth(RatPoly({Rat(-3), Rat(-6)})) == 3);
    // non-reduced common denominator collapses: 2/6 + (4/6)x -> (1 + 2x)/3
    CHECK(bitwidth(RatPoly({Rat(2, 6), Rat(4, 6)})) == 2);
}

TEST_CASE("matrix and vector bit width") {
    RatMatrix zero1(1, 1);
    CHECK(bitwidth(zero1) == 1);
    CHECK(bitwidth(RatMatrix::identity(2)) == 1);
    CHECK(bitwidth(RatMatrix(1, 2, {Rat(3, 7), Rat(-8)})) == 4);
    CHECK(bitwidth(std::vector<Rat>{Rat(-3), Rat(-6)}) == 3);
    CHECK(bitwidth(std::vector<Rat>{}) == 0);
}
