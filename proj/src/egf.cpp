#include "eulertri/egf.hpp"

#include "eulertri/rules.hpp"
#include "eulertri/transforms.hpp"
#include "eulertri/triangle.hpp"

#include <random>
#include <stdexcept>

namespace eulertri {

namespace {

// sum_{m>=1} u^(m-1) t^m / m!
BiSeries divided_exp_tail(const Poly& u, std::size_t order) {
    std::vector<Poly> c(order + 1);
    Poly power = Poly::constant(Rational(1));
    for (std::size_t m = 1; m <= order; ++m) {
        c[m] = power * (Rational(1) / factorial(m));
        power *= u;
    }
    return BiSeries(order, std::move(c));
}

bool integral(const Poly& p) {
    for (const auto& c : p.coeffs()) {
        if (!c.is_integer()) return false;
    }
    return true;
}

VerificationReport compare_rows(std::string target, const BiSeries& series, const Triangle& t, bool want_integral) {
    VerificationReport rep;
    rep.target = std::move(target);
    rep.n_max = series.order();
    for (std::size_t n = 0; n <= series.order(); ++n) {
        const Poly got = series[n] * factorial(n);
        const Poly want = row_poly(t, n);
        std::string bad = first_difference(want, got, 'q');
        if (bad.empty() && want_integral && !integral(got)) bad = "n! [t^n] has a non-integer coefficient";
        rep.add(static_cast<long>(n), bad.empty(), bad);
    }
    return rep;
}

}  // namespace

BiSeries frobenius_egf(const Rational& a1, const Rational& a2, const Rational& b1, const Rational& b2,
                       std::size_t order) {
    if (a1.is_zero() || b1.is_zero()) {
        throw std::invalid_argument("frobenius_egf: a1 and b1 must be nonzero");
    }
    // 1 + b1 q (1 - e^{a1 t}) / a1 = 1 - b1 q sum_{m>=1} a1^(m-1) t^m/m!
    const BiSeries tail = divided_exp_tail(Poly::constant(a1), order) * Poly::monomial(-b1, 1);
    const BiSeries bracket = BiSeries::constant(order, Poly::constant(Rational(1))) + tail;
    return BiSeries::exp_linear(order, Poly::constant(a2)) * bracket.pow(-(Rational(1) + b2 / b1));
}

BiSeries staircase_egf(std::size_t order) {
    const Poly u{-1, 1};
    const BiSeries denom = BiSeries::constant(order, Poly::constant(Rational(1))) -
                           divided_exp_tail(u, order) * Poly{1, 1};
    const BiSeries ratio = BiSeries::exp_linear(order, u * Rational(1, 3)) * denom.reciprocal();
    return ratio.pow(Rational(3, 2));
}

BiSeries flower_egf(std::size_t order) {
    const Poly u{-1, 2};
    const BiSeries denom = BiSeries::constant(order, Poly::constant(Rational(1))) - divided_exp_tail(u, order);
    const BiSeries ratio = BiSeries::exp_linear(order, u * Rational(1, 3)) * denom.reciprocal();
    return ratio.pow(Rational(3, 2));
}

VerificationReport verify_egf_F(const Rational& a1, const Rational& a2, const Rational& b1, const Rational& b2,
                                std::size_t order, const std::string& scope) {
    const Triangle f = build_generic(rules::frobenius(a1, a2, b1, b2), order);
    const bool ints = a1.is_integer() && a2.is_integer() && b1.is_integer() && b2.is_integer();
    auto rep = compare_rows("egfF", frobenius_egf(a1, a2, b1, b2, order), f, ints);
    rep.scope = scope;
    rep.path = "n! [t^n] e^{a2 t}[1 + b1 q (1 - e^{a1 t})/a1]^{-(1 + b2/b1)} against F_n(q)";
    return rep;
}

VerificationReport verify_egf_F_random(std::size_t draws, std::size_t order, std::uint64_t seed) {
    VerificationReport rep;
    rep.target = "egfF";
    rep.scope = "random";
    rep.path = "random nonzero a1, b1; one check per draw";
    rep.n_max = order;
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < draws; ++i) {
        const Rational a1 = draw_small_rational(rng, true);
        const Rational a2 = draw_small_rational(rng);
        const Rational b1 = draw_small_rational(rng, true);
        const Rational b2 = draw_small_rational(rng);
        const auto f = verify_egf_F(a1, a2, b1, b2, order).first_failure();
        rep.add(static_cast<long>(i), !f,
                f ? "a1=" + a1.to_string() + " a2=" + a2.to_string() + " b1=" + b1.to_string() + " b2=" +
                        b2.to_string() + " n=" + std::to_string(f->n) + " " + f->detail
                  : "",
                "draw");
    }
    rep.notes.push_back("seed " + std::to_string(seed));
    return rep;
}

VerificationReport verify_egf_staircase(std::size_t order) {
    TriangleParams p;
    p.a1 = 1;
    p.a2 = 1;
    p.b0 = 1;
    p.b2 = 1;
    p.c = 1;
    p.d = 1;
    auto rep = compare_rows("egf-staircase", staircase_egf(order), build_T(p, order), true);
    rep.scope = "staircase";
    rep.path = "(q-1) cancelled from numerator and denominator, power 3/2 via exp(3/2 log)";
    return rep;
}

VerificationReport verify_egf_flower(std::size_t order) {
    auto rep = compare_rows("egf-flower", flower_egf(order), build_generic(rules::flower(), order), true);
    rep.scope = "flower";
    rep.path = "(2q-1) cancelled from numerator and denominator, power 3/2 via exp(3/2 log)";
    return rep;
}

}  // namespace eulertri
