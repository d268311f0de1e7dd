#include <doctest.h>

#include <array>
#include <set>

#include "grsq/bitwidth.hpp"
#include "grsq/bounds.hpp"
#include "grsq/codec.hpp"
#include "grsq/sampling.hpp"

using namespace grsq;

namespace {

BoundInputs inputs(std::size_t n, std::size_t k, std::size_t tau = 0, std::size_t la = 1,
                   std::size_t lv = 1, std::size_t lvp = 1, std::size_t lu = 1,
                   std::size_t le = 1) {
    return BoundInputs{n, k, tau, la, lv, lvp, lu, le};
}

}  // namespace

TEST_CASE("generator table cells") {
    CHECK(bound_generator_vandermonde(inputs(8, 2, 0, 3, 1, 1), Preset::Custom) == 4);
    CHECK(bound_generator_vandermonde(inputs(8, 1, 0, 5), Preset::VPrimeOne) == 0);
    CHECK(bound_generator_vandermonde(inputs(4, 2, 0, 3), Preset::VOne) == 24);
    CHECK(bound_generator_vandermonde(inputs(4, 3, 0, 2), Preset::CauchyUnit) == 14);

    CHECK(bound_generator_cauchy(inputs(8, 2, 0, 3), Preset::CauchyUnit) == 7);
    CHECK(bound_generator_cauchy(inputs(8, 1, 0, 1, 1, 1), Preset::Custom) == 5);
    CHECK(bound_generator_cauchy(inputs(8, 1, 0, 9), Preset::VPrimeOne) == 0);
    CHECK(bound_generator_cauchy(inputs(6, 2, 0, 2), Preset::VOne) == 45);
}

TEST_CASE("parity-check table cells") {
    CHECK(bound_parity_check(inputs(6, 2, 0, 3), Preset::VOne) == 9);
    CHECK(bound_parity_check(inputs(5, 4, 0, 7), Preset::VOne) == 0);
    CHECK(bound_parity_check(inputs(4, 2, 0, 2), Preset::CauchyUnit) == 12);
    CHECK(bound_parity_check(inputs(5, 2, 0, 3, 4, 1), Preset::Custom) == 10);
    CHECK(bound_parity_check(inputs(5, 2, 0, 2), Preset::VPrimeOne) == 24);
}

TEST_CASE("codeword and syndrome bounds") {
    CHECK(bound_codeword(inputs(8, 2, 0, 1, 1, 1, 1), 4) == 12);
    CHECK(bound_syndrome(inputs(8, 2, 1, 1, 1, 1, 1, 2), 2, false) == 5);
    CHECK(bound_syndrome(inputs(8, 2, 0, 1, 1, 1, 1, 2), 2, false) == 0);
    CHECK(bound_syndrome(inputs(3, 1, 1, 1, 1, 1, 1, 2), 2, true) == 9);
}

TEST_CASE("decoder polynomial bounds") {
    CHECK(bound_eea_input(3, 3) == 12);
    CHECK(bound_eea_input(5, 0) == 5);
    CHECK(bound_eea_input(5, 10) == 55);
    CHECK(bound_locator_poly(1, 2) == 4);
    CHECK(bound_locator_poly(0, 7) == 0);
    CHECK(bound_locator_poly(2, 3) == 10);
    CHECK(bound_evaluator_poly(inputs(8, 2, 1, 2, 1, 1, 1, 2)) == 10);
    CHECK(bound_evaluator_poly(inputs(8, 2, 0, 2, 1, 1, 1, 2)) == 0);
    CHECK(bound_evaluator_poly(inputs(8, 2, 2, 3, 3, 1, 1, 3)) == 28);
}

TEST_CASE("trade-off syndrome cases, both printed variants") {
    BoundInputs in = inputs(8, 2, 2, 3, 1, 1, 1, 4);
    CHECK(bound_syndrome_case(in, Preset::VOne, false) == 2 * (4 + 5 * 3 + 1));
    CHECK(bound_syndrome_case(in, Preset::VOne, true) == 3 * 4 + 5 * 3 + 8);
    // printed corollary form: tau (lambda(e) + 3(n-k) lambda(alpha) + n-k+1)
    CHECK(bound_syndrome_case(in, Preset::CauchyUnit, false) == 2 * (4 + 18 * 3 + 7));
    // table-composed form: tau (lambda(e) + (3(n-k)-1) lambda(alpha) + n-k+1)
    CHECK(bound_syndrome_case_composed(in, Preset::CauchyUnit, false) == 2 * (4 + 17 * 3 + 7));
    CHECK(bound_syndrome_case(in, Preset::CauchyUnit, false) >
          bound_syndrome_case_composed(in, Preset::CauchyUnit, false));
    CHECK_THROWS_AS(bound_syndrome_case(in, Preset::VPrimeOne, false), std::invalid_argument);
}

TEST_CASE("codeword case cells compose the matrix cells") {
    BoundInputs in = inputs(8, 3, 0, 2, 1, 1, 5, 1);
    CHECK(bound_codeword_case(in, Preset::CauchyUnit, GeneratorKind::CauchySystematic) ==
          3 * (5 + (2 * 2 + 1) + 1));
    CHECK(bound_codeword_case(in, Preset::VOne, GeneratorKind::Vandermonde) ==
          3 * (5 + ((2 * 8 + 3 - 3) * 2 + 7) + 1));
}

TEST_CASE("conformance check") {
    std::map<std::string, std::size_t> measured{{"u", 1}, {"G", 4}, {"c", 9}};
    BoundInputs in = inputs(4, 2, 0, 3, 1, 1, 1, 1);
    SUBCASE("passing run") {
        GrowthReport rep =
            conformance_check(measured, in, Preset::Custom, GeneratorKind::Vandermonde, false, 3);
        CHECK(rep.conforms);
        CHECK(rep.bounds.at("G") == 4);
        CHECK(rep.bounds.at("c") == 2 * (1 + 4 + 1));
        CHECK(rep.bounds.count("s") == 0);
    }
    SUBCASE("inflated measurement flips the flag") {
        measured["c"] = 1000;
        GrowthReport rep =
            conformance_check(measured, in, Preset::Custom, GeneratorKind::Vandermonde, false, 3);
        CHECK(!rep.conforms);
    }
    SUBCASE("tau = 0 skips decoding-side bounds") {
        std::map<std::string, std::size_t> m{{"s", 1}, {"Lambda", 1}, {"Omega", 1}};
        GrowthReport rep =
            conformance_check(m, in, Preset::Custom, GeneratorKind::Vandermonde, false, 3);
        CHECK(rep.bounds.empty());
        CHECK(rep.conforms);
    }
    SUBCASE("matrix cells are floored at one where the printed cell collapses") {
        std::map<std::string, std::size_t> m{{"G", 1}, {"H", 1}};
        BoundInputs edge = inputs(4, 1, 0, 3, 1, 1, 1, 1);  // k = 1
        GrowthReport rep =
            conformance_check(m, edge, Preset::VPrimeOne, GeneratorKind::Vandermonde, false, 4);
        CHECK(rep.bounds.at("G") == 1);
        CHECK(rep.conforms);
    }
}

TEST_CASE("1000 random encode runs conform, all presets and kinds") {
    Rng rng(919);
    for (int i = 0; i < 1000; ++i) {
        std::size_t n = 2 + rng.below(31);
        std::size_t k = 1 + rng.below(n - 1);
        Preset preset = std::array{Preset::VPrimeOne, Preset::CauchyUnit, Preset::VOne}[i % 3];
        GeneratorKind kind =
            i % 2 ? GeneratorKind::Vandermonde : GeneratorKind::CauchySystematic;
        std::set<Rat> alpha_set;
        while (alpha_set.size() < n) alpha_set.insert(sample_rational(6, rng));
        GrsCode code = make_code(n, k, {alpha_set.begin(), alpha_set.end()}, preset);
        std::vector<Rat> u(k);
        for (Rat& x : u) x = sample_rational(1 + rng.below(32), rng);
        RatMatrix g = generator(code, kind);
        std::map<std::string, std::size_t> measured;
        measured["u"] = bitwidth(u);
        measured["G"] = bitwidth(g);
        measured["H"] = bitwidth(parity_check(code));
        measured["c"] = bitwidth(row_times_matrix(u, g));
        BoundInputs in = bound_inputs_for(code, 0, measured["u"], 0);
        GrowthReport rep = conformance_check(measured, in, preset, kind, false, code.distance());
        REQUIRE(rep.conforms);
    }
}

TEST_CASE("report serialization") {
    GrowthReport rep;
    rep.measured = {{"s", 3}, {"Lambda", 2}};
    rep.bounds = {{"s", 5}, {"Lambda", 4}};
    rep.recheck();
    std::string text = rep.to_kv_text();
    CHECK(text.find("measured.s = 3") != std::string::npos);
    CHECK(text.find("bound.s = 5") != std::string::npos);
    CHECK(text.find("measured.Lambda = 2") != std::string::npos);
    CHECK(text.find("conforms = true") != std::string::npos);
    rep.measured["s"] = 6;
    rep.recheck();
    CHECK(rep.to_kv_text().find("conforms = false") != std::string::npos);
}
