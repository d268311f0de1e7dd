#include <doctest.h>

#include <array>
#include <set>

#include "grsq/bitwidth.hpp"
#include "grsq/bounds.hpp"
#include "grsq/code.hpp"
#include "grsq/sampling.hpp"

using namespace grsq;

namespace {

std::vector<Rat> distinct_random_alphas(Rng& rng, std::size_t n, std::size_t bits) {
    std::set<Rat> seen;
    while (seen.size() < n) seen.insert(sample_rational(bits, rng));
    return {seen.begin(), seen.end()};
}

}  // namespace

TEST_CASE("weights") {
    auto w = weights(std::vector<Rat>{Rat(1), Rat(2), Rat(3)});
    CHECK(w == std::vector<Rat>{Rat(1, 2), Rat(-1), Rat(1, 2)});
    auto w2 = weights(std::vector<Rat>{Rat(1), Rat(-1)});
    CHECK(w2 == std::vector<Rat>{Rat(1, 2), Rat(-1, 2)});
    CHECK_THROWS_AS(weights(std::vector<Rat>{Rat(1), Rat(1)}), std::invalid_argument);
}

TEST_CASE("make_code presets") {
    SUBCASE("vprime1") {
        GrsCode code = make_code(3, 1, {Rat(1), Rat(2), Rat(3)}, Preset::VPrimeOne);
        CHECK(code.v_prime == std::vector<Rat>{Rat(1), Rat(1), Rat(1)});
        CHECK(code.v == std::vector<Rat>{Rat(1, 2), Rat(-1), Rat(1, 2)});
        CHECK(code.distance() == 3);
        CHECK(code.radius() == 1);
    }
    SUBCASE("v1") {
        GrsCode code = make_code(4, 2, {Rat(1), Rat(2), Rat(3), Rat(4)}, Preset::VOne);
        CHECK(code.v == std::vector<Rat>(4, Rat(1)));
        CHECK(code.v_prime == std::vector<Rat>{Rat(-1, 6), Rat(1, 2), Rat(-1, 2), Rat(1, 6)});
    }
    SUBCASE("product invariant v * v' = w for every preset") {
        Rng rng(51);
        for (Preset p : {Preset::VPrimeOne, Preset::CauchyUnit, Preset::VOne}) {
            auto alphas = distinct_random_alphas(rng, 7, 8);
            GrsCode code = make_code(7, 3, alphas, p);
            auto w = weights(code.alphas);
            for (std::size_t i = 0; i < 7; ++i) CHECK(code.v[i] * code.v_prime[i] == w[i]);
        }
    }
    SUBCASE("rejections") {
        CHECK_THROWS_AS(make_code(3, 3, {Rat(1), Rat(2), Rat(3)}, Preset::VOne),
                        std::invalid_argument);
        CHECK_THROWS_AS(make_code(3, 0, {Rat(1), Rat(2), Rat(3)}, Preset::VOne),
                        std::invalid_argument);
        CHECK_THROWS_AS(make_code(3, 1, {Rat(0), Rat(2), Rat(3)}, Preset::VOne),
                        std::invalid_argument);
        CHECK_THROWS_AS(make_code(3, 1, {Rat(2), Rat(2), Rat(3)}, Preset::VOne),
                        std::invalid_argument);
        CHECK_THROWS_AS(make_code(3, 1, {Rat(1), Rat(2)}, Preset::VOne), std::invalid_argument);
        CHECK_THROWS_AS(make_code(3, 1, {Rat(1), Rat(2), Rat(3)}, Preset::Custom),
                        std::invalid_argument);
    }
}

TEST_CASE("custom multipliers derive the partner from w") {
    std::vector<Rat> alphas{Rat(1), Rat(2), Rat(3)};
    auto w = weights(alphas);
    GrsCode with_v = make_code_with_v(3, 1, alphas, {Rat(2), Rat(3), Rat(5)});
    for (std::size_t i = 0; i < 3; ++i) CHECK(with_v.v[i] * with_v.v_prime[i] == w[i]);
    GrsCode with_vp = make_code_with_v_prime(3, 1, alphas, {Rat(2), Rat(3), Rat(5)});
    for (std::size_t i = 0; i < 3; ++i) CHECK(with_vp.v[i] * with_vp.v_prime[i] == w[i]);
    CHECK_THROWS_AS(make_code_with_v(3, 1, alphas, {Rat(0), Rat(1), Rat(1)}),
                    std::invalid_argument);
}

TEST_CASE("generator and parity-check matrices") {
    GrsCode code4 = make_code(4, 2, {Rat(1), Rat(2), Rat(3), Rat(4)}, Preset::VPrimeOne);
    RatMatrix g = generator_vandermonde(code4);
    CHECK(g == RatMatrix(2, 4, {Rat(1), Rat(1), Rat(1), Rat(1), Rat(1), Rat(2), Rat(3), Rat(4)}));

    GrsCode code3 = make_code(3, 1, {Rat(1), Rat(2), Rat(3)}, Preset::VPrimeOne);
    RatMatrix h = parity_check(code3);
    CHECK(h == RatMatrix(2, 3, {Rat(1, 2), Rat(-1), Rat(1, 2), Rat(1, 2), Rat(-2), Rat(3, 2)}));

    GrsCode code2 = make_code(2, 1, {Rat(1), Rat(-1)}, Preset::VPrimeOne);
    CHECK(parity_check(code2).rows() == 1);

    SUBCASE("k = 1 generator with v' = 1 is the all-ones row") {
        RatMatrix g1 = generator_vandermonde(code3);
        CHECK(g1 == RatMatrix(1, 3, {Rat(1), Rat(1), Rat(1)}));
    }
}

TEST_CASE("duality G H^T = 0 over random codes and presets") {
    Rng rng(52);
    int built = 0;
    while (built < 200) {
        std::size_t n = 2 + rng.below(31);
        std::size_t k = 1 + rng.below(n - 1);
        Preset preset =
            std::array{Preset::VPrimeOne, Preset::CauchyUnit, Preset::VOne}[built % 3];
        GrsCode code = make_code(n, k, distinct_random_alphas(rng, n, 6), preset);
        CHECK((generator_vandermonde(code) * parity_check(code).transposed()).is_zero());
        ++built;
    }
}

TEST_CASE("Cauchy systematic generator") {
    SUBCASE("cauchyunit block is 1/(alpha_{j+k} - alpha_i)") {
        GrsCode code = make_code(4, 2, {Rat(1), Rat(2), Rat(3), Rat(4)}, Preset::CauchyUnit);
        RatMatrix g = generator_cauchy(code);
        CHECK(g.at(0, 0) == Rat(1));
        CHECK(g.at(0, 1) == Rat(0));
        CHECK(g.at(1, 1) == Rat(1));
        CHECK(g.at(0, 2) == Rat(1, 2));
        CHECK(g.at(0, 3) == Rat(1, 3));
        CHECK(g.at(1, 2) == Rat(1));
        CHECK(g.at(1, 3) == Rat(1, 2));
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j)
                CHECK(g.at(i, j + 2) == (code.alphas[j + 2] - code.alphas[i]).inv());
    }
    SUBCASE("rows live in the code and are independent, all presets") {
        Rng rng(53);
        for (Preset p : {Preset::VPrimeOne, Preset::CauchyUnit, Preset::VOne}) {
            for (int i = 0; i < 12; ++i) {
                std::size_t n = 3 + rng.below(12);
                std::size_t k = 1 + rng.below(n - 1);
                GrsCode code = make_code(n, k, distinct_random_alphas(rng, n, 5), p);
                RatMatrix g = generator_cauchy(code);
                CHECK((g * parity_check(code).transposed()).is_zero());
                CHECK(g.rank() == k);
            }
        }
    }
}

TEST_CASE("kernel system of the multipliers") {
    GrsCode code = make_code(5, 2, enumerate_min_locators(5), Preset::CauchyUnit);
    CHECK(verify_system_eq1(code));
    SUBCASE("perturbing v breaks it") {
        GrsCode bad = code;
        bad.v[0] += Rat(1);
        CHECK(!verify_system_eq1(bad));
    }
    SUBCASE("n = 2 reduces to w_1 = -w_2") {
        GrsCode two = make_code(2, 1, {Rat(1), Rat(-1)}, Preset::VPrimeOne);
        CHECK(verify_system_eq1(two));
        CHECK(two.v[0] == -two.v[1]);
    }
}

TEST_CASE("MDS: all k x k Vandermonde generator minors are nonzero, n <= 7 here") {
    // the acceptance suite runs the full n <= 10 sweep
    for (std::size_t n = 2; n <= 7; ++n) {
        auto alphas = enumerate_min_locators(n);
        for (std::size_t k = 1; k < n; ++k) {
            GrsCode code = make_code(n, k, alphas, Preset::VPrimeOne);
            RatMatrix g = generator_vandermonde(code);
            std::vector<std::size_t> cols(k);
            for (std::size_t i = 0; i < k; ++i) cols[i] = i;
            while (true) {
                CHECK(g.selected_columns(cols).det() != Rat(0));
                std::size_t i = k;
                while (i > 0 && cols[i - 1] == n - k + i - 1) --i;
                if (i == 0) break;
                ++cols[i - 1];
                for (std::size_t j = i; j < k; ++j) cols[j] = cols[j - 1] + 1;
            }
        }
    }
}

TEST_CASE("v' = 1 generator width meets (k-1) lambda(alpha) when powers carry the max") {
    // needs lambda(n^(k-1)) = (k-1) lambda(n); n = 2^m - 1 realizes it
    for (std::size_t n : {3, 7, 15, 31}) {
        std::vector<Rat> alphas(n);
        for (std::size_t i = 0; i < n; ++i) alphas[i] = Rat(static_cast<long>(i) + 1);
        for (std::size_t k = 2; k <= std::min<std::size_t>(n - 1, 4); ++k) {
            REQUIRE(bitwidth(Rat(static_cast<long>(n)).pow(k - 1)) ==
                    (k - 1) * bitwidth(static_cast<long>(n)));
            GrsCode code = make_code(n, k, alphas, Preset::VPrimeOne);
            BoundInputs in = bound_inputs_for(code, 0, 0, 0);
            CHECK(bitwidth(generator_vandermonde(code)) ==
                  bound_generator_vandermonde(in, Preset::VPrimeOne));
        }
    }
}
