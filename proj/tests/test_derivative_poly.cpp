#include "eulertri/derivative_poly.hpp"
#include "eulertri/rules.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace eulertri;
using namespace eulertri::testing;

TEST_CASE("secant derivative polynomials") {
    const auto q = build_Q(1, 4);
    CHECK(q[0].dense() == Poly{1});
    CHECK(q[1].dense() == Poly{0, 1});
    CHECK(q[2].dense() == Poly{1, 0, 2});
    CHECK(q[3].dense() == Poly{0, 5, 0, 6});
    CHECK(q[4].dense() == Poly{5, 0, 28, 0, 24});
}

TEST_CASE("general delta derivative polynomials") {
    const Rational delta(2);
    const auto q = build_Q(delta, 3);
    // d/dt sec^2 = 2 tan sec^2, d^2/dt^2 = (2 + 6 tan^2) sec^2
    CHECK(q[1].dense() == Poly{0, 2});
    CHECK(q[2].dense() == Poly{2, 0, 6});
    CHECK(q[2].at(Rational(1)) == Rational(8));
}

TEST_CASE("dense rule reproduces Q") {
    const auto rule = build_generic(rules::derivative_dense(Rational(1)), 8);
    const auto q = build_Q(1, 8);
    for (std::size_t n = 0; n <= 8; ++n) CHECK(row_poly(rule, n) == q[n].dense());
}

TEST_CASE("Springer numbers") {
    const auto s = springer(10);
    CHECK(s == ints({1, 1, 3, 11, 57, 361, 2763, 24611, 250737, 2873041, 36581523}));
    CHECK(springer_via_sec_derivatives(10) == s);
    CHECK(verify_springer(12).passed());
}

TEST_CASE("radical-free and Eulerian identities") {
    CHECK(verify_thm34(2, 1, 1, 12).passed());
    CHECK(verify_thm34(3, 2, 5, 10).passed());
    CHECK(verify_thm34_random(20, 10, 0).passed());
    CHECK(verify_thm35(1, 1, 12).passed());
    CHECK(verify_thm35(2, 1, 12).passed());
    CHECK(verify_thm35_random(20, 10, 0).passed());
}

TEST_CASE("derivative polynomial EGF") {
    CHECK(verify_Q_egf(1, 10).passed());
    CHECK(verify_Q_egf(Rational(1, 2), 8).passed());
    CHECK(verify_Q_egf(Rational(-3, 2), 8).passed());
}
