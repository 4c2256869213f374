#include "eulertri/oracles.hpp"
#include "eulertri/rules.hpp"
#include "eulertri/transforms.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace eulertri;
using namespace eulertri::testing;

TEST_CASE("lift of the staircase companion array") {
    const auto p = params(0, 1, 1, 1, 0, 1, 1, 1);
    REQUIRE(p.compatible());
    const auto a = build_A(p, 10);
    const auto t = build_T(p, 10);
    for (std::size_t n = 0; n <= 10; ++n) CHECK(lift_A_to_T(a, p.lambda, p.d, n) == row_of(t, n));
}

TEST_CASE("companion lift on compatible presets") {
    CHECK(verify_thm21(params(0, 1, 1, 1, 0, 1, 1, 1), 15).passed());
    CHECK(verify_thm21(params(1, 0, 0, 2, 1, -1, -1, 1), 15).passed());
    CHECK(verify_thm21(params(0, 1, 1, 0, 0, 2, 1, 1), 15).passed());
    CHECK(verify_thm21(params(0, 2, 1, 0, 0, 3, 2, 1), 15).passed());
}

TEST_CASE("companion lift rejects incompatible parameters") {
    CHECK_THROWS_WITH_AS(verify_thm21(params(0, 1, 0, 0, 5, 0, 1, 1), 5), doctest::Contains("b1 = 5"),
                         std::invalid_argument);
}

TEST_CASE("companion lift over random draws") {
    const auto r = verify_thm21_random(100, 12, 0);
    CHECK(r.passed());
    CHECK(r.checks.size() >= 100);
}

TEST_CASE("random draws are reproducible") {
    std::mt19937_64 a(42), b(42);
    for (int i = 0; i < 20; ++i) {
        const auto pa = draw_compatible_params(a);
        const auto pb = draw_compatible_params(b);
        CHECK(pa.describe() == pb.describe());
        CHECK(pa.compatible());
    }
    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
        const Rational r = draw_small_rational(rng, true, true);
        CHECK(r.sign() > 0);
        CHECK(abs(r.numerator()) <= 10);
        CHECK(r.denominator() <= 10);
    }
}

TEST_CASE("Frobenius explicit formula, classical instance") {
    const FrobeniusParams p{1, 0, 1, 0};
    const auto t = build_generic(rules::frobenius_classical(), 8);
    for (long n = 0; n <= 8; ++n) {
        for (long k = 0; k <= n; ++k) {
            CHECK(frobenius_explicit(p, n, k) == t.at(n, k));
        }
    }
    CHECK(verify_thm31(p, 12).passed());
    CHECK(verify_thm31({1, 1, 2, 1}, 12).passed());
    CHECK(verify_thm31_random(100, 8, 0).passed());
}

TEST_CASE("Frobenius parameter validation") {
    CHECK_THROWS(FrobeniusParams{0, 1, 1, 1}.validate());
}

TEST_CASE("Eulerian-Frobenius explicit formulas") {
    CHECK(verify_thm32({1, 1, 1, 1}, 12).passed());
    CHECK(verify_thm32({2, 1, 2, 1}, 12).passed());
    CHECK(verify_thm32({1, 1, 2, 1}, 12).passed());
    CHECK(verify_thm32_random(100, 8, 0).passed());
}

TEST_CASE("Eulerian numbers through the Stirling sum") {
    CHECK(eulerian_via_stirling(4, 2) == Rational(11));
    CHECK(oracle_eulerian(4)[1] == Rational(11));
    CHECK(eulerian_via_stirling(5, 3) == Rational(66));
    CHECK(verify_formu_eulerian(12).passed());
}

TEST_CASE("gamma decomposition of Eulerian rows") {
    const auto t = build_generic(rules::shifted_eulerian(), 6);
    const auto out = gamma_decompose(row_poly(t, 4), 4);
    REQUIRE(out.gamma);
    CHECK(out.gamma->entries == ints({1, 22, 16}));
    CHECK(out.gamma->nonnegative());
    CHECK(reconstruct(*out.gamma) == row_poly(t, 4));
}

TEST_CASE("gamma decomposition fails on asymmetric rows") {
    const auto out = gamma_decompose(Poly{1, 3}, 1);
    CHECK_FALSE(out.gamma);
    CHECK_FALSE(out.residual.is_zero());
    CHECK_FALSE(out.reason.empty());
}

TEST_CASE("gamma identity on Eulerian and type B rows") {
    CHECK(verify_thm33(1, 1, 2, 15).passed());
    CHECK(verify_thm33(2, 1, 4, 15).passed());
    CHECK(verify_thm33_random(20, 10, 0).passed());
}
