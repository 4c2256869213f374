#include "eulertri/analysis.hpp"
#include "eulertri/rules.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace eulertri;
using namespace eulertri::testing;

namespace {

Poly from_roots(std::initializer_list<long> roots) {
    Poly p{1};
    for (long r : roots) p *= Poly{-Rational(r), 1};
    return p;
}

}  // namespace

TEST_CASE("square-free decomposition") {
    const Poly p = from_roots({1, 1, 1, 2, 2, 3});
    const auto parts = squarefree_decomposition(p);
    REQUIRE(parts.size() == 3);
    CHECK(parts[0] == from_roots({3}));
    CHECK(parts[1] == from_roots({2}));
    CHECK(parts[2] == from_roots({1}));
}

TEST_CASE("Sturm root counts") {
    const Poly p = from_roots({-3, -1, 2});
    const auto chain = sturm_chain(p);
    CHECK(count_roots_closed(chain, -5, 5) == 3);
    CHECK(count_roots_closed(chain, -1, 2) == 2);
    CHECK(count_roots_closed(chain, -3, -3) == 1);
    CHECK(count_roots_closed(chain, 0, 1) == 0);
}

TEST_CASE("real-rootedness with multiplicity") {
    const auto r = sturm_analyze(from_roots({-2, -2, -1}), Interval{-2, 0});
    CHECK(r.real_rooted);
    CHECK(r.degree == 3);
    CHECK(r.distinct_real == 2);
    CHECK(r.root_count_total == 3);
    CHECK(*r.roots_in_interval == 3);
    CHECK(r.isolating_intervals.size() == 2);
    CHECK_FALSE(sturm_analyze(Poly{1, 0, 1}).real_rooted);
    CHECK_FALSE(sturm_analyze(Poly{1, 1, 1}).real_rooted);
}

TEST_CASE("isolating intervals contain one root each") {
    const Poly p = from_roots({-7, -3, 0, 4}) * Poly{-2, 0, 1};
    const auto r = sturm_analyze(p);
    REQUIRE(r.real_rooted);
    REQUIRE(r.isolating_intervals.size() == 6);
    const auto chain = sturm_chain(p);
    for (const auto& iv : r.isolating_intervals) {
        CHECK(iv.lo < iv.hi);
        CHECK(count_roots_closed(chain, iv.lo, iv.hi) - (p.eval(iv.lo).is_zero() ? 1 : 0) == 1);
    }
}

TEST_CASE("log-concavity") {
    CHECK(log_concave(ints({1, 4, 6, 4, 1})).ok);
    const auto bad = log_concave(ints({1, 1, 5}));
    CHECK_FALSE(bad.ok);
    CHECK(*bad.witness == 0);
}

TEST_CASE("interlacing of Eulerian rows") {
    const auto t = build_generic(rules::shifted_eulerian(), 8);
    for (std::size_t n = 1; n <= 8; ++n) CHECK(interlacing(row_poly(t, n - 1), row_poly(t, n)));
    CHECK_FALSE(interlacing(from_roots({-1, -2}), from_roots({-5, -4, -3})));
    CHECK(interlacing(from_roots({-1, -3}), from_roots({-4, -2, 0})));
}

TEST_CASE("structure summary") {
    const auto s = structure_summary(Poly{1, 26, 66, 26, 1});
    CHECK(s.symmetric);
    CHECK(s.unimodal);
    REQUIRE(s.gamma_nonneg);
    CHECK(*s.gamma_nonneg);
    CHECK(s.gamma == ints({1, 22, 16}));
    const auto a = structure_summary(Poly{1, 3});
    CHECK_FALSE(a.symmetric);
    CHECK_FALSE(a.gamma_nonneg);
    const auto shifted = structure_summary(Poly{0, 1, 1});
    CHECK(shifted.symmetric);
    CHECK(shifted.center == Rational(3, 2));
}

TEST_CASE("strong q-log-convexity of Lambert rows") {
    const auto beta = build_generic(rules::lambert_beta_shift(), 9);
    std::vector<Poly> polys;
    for (std::size_t n = 0; n <= 9; ++n) polys.push_back(row_poly(beta, n));
    CHECK(strong_q_log_convex(polys, 8).verdict);
    // f_2 f_0 - f_1^2 = -2q - q^2
    std::vector<Poly> bad{Poly{1}, Poly{1, 1}, Poly{1}};
    const auto r = strong_q_log_convex(bad, 1);
    CHECK_FALSE(r.verdict);
    CHECK(r.witness);
}

TEST_CASE("Lambert and staircase analyses") {
    CHECK(verify_prop41(15, 8).passed());
    CHECK(verify_prop42(12, 8).passed());
}

TEST_CASE("staircase triple-sum formula") {
    const auto r = verify_prop42(12, 8);
    CHECK(filter_label(r, "(ii)").passed());
}
