#include <doctest.h>

#include <set>

#include "grsq/bitwidth.hpp"
#include "grsq/sampling.hpp"

using namespace grsq;

TEST_CASE("sample_rational respects the bit-width budget") {
    Rng rng(71);
    for (int i = 0; i < 2000; ++i) {
        std::size_t t = 1 + rng.below(80);
        Rat x = sample_rational(t, rng);
        CHECK(!x.is_zero());
        CHECK(bitwidth(x) <= t);
    }
    CHECK_THROWS_AS(sample_rational(0, rng), std::invalid_argument);
}

TEST_CASE("t = 1 only produces +-1") {
    Rng rng(72);
    for (int i = 0; i < 200; ++i) {
        Rat x = sample_rational(1, rng);
        CHECK((x == Rat(1) || x == Rat(-1)));
    }
}

TEST_CASE("fixed seed reproduces the stream bit-exactly") {
    Rng a(1234), b(1234);
    for (int i = 0; i < 100; ++i) {
        CHECK(sample_rational(64, a) == sample_rational(64, b));
    }
    Rng c(1235);
    bool all_equal = true;
    Rng a2(1234);
    for (int i = 0; i < 20; ++i)
        if (sample_rational(64, a2) != sample_rational(64, c)) all_equal = false;
    CHECK(!all_equal);
}

TEST_CASE("derive_stream separates (seed, n, trial) cells") {
    std::set<std::uint64_t> seen;
    for (std::uint64_t seed : {0ULL, 1ULL, 99ULL})
        for (std::uint64_t n : {30ULL, 60ULL})
            for (std::uint64_t trial = 0; trial < 50; ++trial)
                seen.insert(derive_stream(seed, n, trial));
    CHECK(seen.size() == 3 * 2 * 50);
}

TEST_CASE("error patterns have distinct positions and nonzero values") {
    Rng rng(73);
    for (int i = 0; i < 200; ++i) {
        std::size_t n = 2 + rng.below(40);
        std::size_t w = rng.below(n + 1);
        ErrorPattern p = sample_error_pattern(n, w, 16, rng);
        CHECK(p.weight() == w);
        std::set<std::size_t> pos(p.positions.begin(), p.positions.end());
        CHECK(pos.size() == w);
        for (std::size_t q : p.positions) CHECK(q < n);
        for (const Rat& v : p.values) CHECK(!v.is_zero());
    }
    CHECK_THROWS_AS(sample_error_pattern(3, 4, 8, rng), std::invalid_argument);
}

TEST_CASE("below is unbiased across its range ends") {
    Rng rng(74);
    std::set<std::uint64_t> seen;
    for (int i = 0; i < 300; ++i) seen.insert(rng.below(7));
    CHECK(seen == std::set<std::uint64_t>{0, 1, 2, 3, 4, 5, 6});
    CHECK_THROWS_AS(rng.below(0), std::invalid_argument);
}
