#include "eulertri/rules.hpp"
#include "eulertri/triangle.hpp"
#include "eulertri/transforms.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace eulertri;
using namespace eulertri::testing;

TEST_CASE("shifted Eulerian rows") {
    const auto t = build_generic(rules::shifted_eulerian(), 5);
    CHECK(row_of(t, 0) == ints({1}));
    CHECK(row_of(t, 3) == ints({1, 11, 11, 1}));
    CHECK(row_of(t, 5) == ints({1, 57, 302, 302, 57, 1}));
}

TEST_CASE("type B Eulerian rows") {
    const auto t = build_generic(rules::type_b_eulerian(), 4);
    CHECK(row_of(t, 2) == ints({1, 6, 1}));
    CHECK(row_of(t, 3) == ints({1, 23, 23, 1}));
    CHECK(row_of(t, 4) == ints({1, 76, 230, 76, 1}));
}

TEST_CASE("master recurrence: staircase instance") {
    const auto t = build_T(params(0, 1, 1, 1, 0, 1, 1, 1), 3);
    CHECK(row_of(t, 1) == ints({1, 2}));
    CHECK(row_of(t, 2) == ints({1, 7, 7}));
    CHECK(row_of(t, 3) == ints({1, 18, 51, 35}));
}

TEST_CASE("runs triangles") {
    const auto r = build_generic(rules::runs_a(), 5);
    CHECK(row_of(r, 4) == ints({0, 2, 12, 10, 0}));
    CHECK(row_of(r, 5) == ints({0, 2, 28, 58, 32, 0}));
    const auto z = build_generic(rules::runs_type_b(), 3);
    CHECK(row_of(z, 1) == ints({0, 1}));
    CHECK(row_of(z, 2) == ints({0, 1, 3}));
    CHECK(row_of(z, 3) == ints({0, 1, 12, 11}));
}

TEST_CASE("Lambert beta and its reciprocal") {
    const auto beta = build_generic(rules::lambert_beta_shift(), 6);
    CHECK(row_of(beta, 0) == ints({1}));
    CHECK(row_of(beta, 1) == ints({2, 1}));
    CHECK(row_of(beta, 2) == ints({9, 8, 2}));
    const auto circ = build_T(params(1, 0, 0, 2, 1, -1, -1, 1), 6);
    CHECK(row_of(circ, 1) == ints({1, 2}));
    CHECK(row_of(circ, 2) == ints({2, 8, 9}));
    CHECK(reciprocal(beta) == circ);
}

TEST_CASE("flower triangle") {
    const auto t = build_generic(rules::flower(), 3);
    CHECK(row_of(t, 1) == ints({1, 1}));
    CHECK(row_of(t, 2) == ints({1, 5, 1}));
}

TEST_CASE("reciprocal is an involution and keeps row sums") {
    const auto t = build_T(params(0, 2, 1, 0, 0, 3, 2, 1), 10);
    CHECK(reciprocal(reciprocal(t)) == t);
    const auto r = reciprocal(t);
    for (std::size_t n = 0; n <= 10; ++n) {
        CHECK(row_poly(t, n).eval(Rational(1)) == row_poly(r, n).eval(Rational(1)));
    }
}

TEST_CASE("engine self-consistency over random parameters") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 30; ++i) {
        TriangleParams p;
        p.lambda = draw_small_rational(rng, true);
        p.a0 = draw_small_rational(rng);
        p.a1 = draw_small_rational(rng);
        p.a2 = draw_small_rational(rng);
        p.b0 = draw_small_rational(rng);
        p.b1 = draw_small_rational(rng);
        p.b2 = draw_small_rational(rng);
        p.c = draw_small_rational(rng);
        p.d = draw_small_rational(rng);
        CHECK(build_generic(master_rule(p), 8) == build_T(p, 8));
        if (p.compatible()) CHECK(build_generic(companion_rule(p), 8) == build_A(p, 8));
    }
}

TEST_CASE("at() returns zero outside the triangle") {
    const auto t = build_generic(rules::shifted_eulerian(), 3);
    CHECK(t.at(3, -1) == Rational(0));
    CHECK(t.at(3, 4) == Rational(0));
    CHECK(t.at(-1, 0) == Rational(0));
    CHECK(t.at(2, 1) == Rational(4));
    CHECK_THROWS(row_poly(t, 4));
}

TEST_CASE("invalid rules are rejected") {
    TriangleParams p;
    p.lambda = 0;
    CHECK_THROWS(build_T(p, 3));
    CoeffRule bad = rules::shifted_eulerian();
    bad.seeds = {{1, 2}};
    CHECK_THROWS(build_generic(bad, 3));
    CHECK_THROWS(build_A(params(0, 1, 0, 0, 5, 0, 1, 1), 3));
}

TEST_CASE("gamma triangle support is bounded") {
    const auto s = build_generic(rules::gamma_triangle(1, 1, 2), 6);
    for (long n = 0; n <= 6; ++n) {
        for (long k = 0; k <= n; ++k) {
            if (2 * k > n + 1) CHECK(s.at(n, k) == Rational(0));
        }
    }
}
