#include "eulertri/derivative_poly.hpp"

#include "eulertri/biseries.hpp"
#include "eulertri/rules.hpp"
#include "eulertri/transforms.hpp"
#include "eulertri/triangle.hpp"

#include <map>
#include <utility>

namespace eulertri {

Poly QPoly::dense() const {
    std::vector<Rational> c(n + 1);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        c[n - 2 * k] = coeffs[k];
    }
    return Poly(std::move(c));
}

Rational QPoly::at(const Rational& t) const { return dense().eval(t); }

std::vector<QPoly> build_Q(const Rational& delta, std::size_t n_max) {
    std::vector<QPoly> out;
    out.push_back({0, delta, {Rational(1)}});
    for (std::size_t n = 0; n < n_max; ++n) {
        const auto& prev = out.back().coeffs;
        QPoly next{n + 1, delta, std::vector<Rational>((n + 1) / 2 + 1)};
        const long ln = static_cast<long>(n);
        for (std::size_t k = 0; k < next.coeffs.size(); ++k) {
            const long lk = static_cast<long>(k);
            Rational acc(0);
            if (k < prev.size()) acc += (Rational(ln - 2 * lk) + delta) * prev[k];
            if (k >= 1 && k - 1 < prev.size()) acc += Rational(ln - 2 * lk + 2) * prev[k - 1];
            next.coeffs[k] = acc;
        }
        out.push_back(std::move(next));
    }
    return out;
}

std::vector<Rational> springer(std::size_t n_max) {
    std::vector<Rational> out;
    for (const auto& q : build_Q(Rational(1), n_max)) {
        Rational s(0);
        for (const auto& c : q.coeffs) s += c;
        out.push_back(s);
    }
    return out;
}

// terms c x^i y^j with D x = y^2, D y = x y
std::vector<Rational> springer_via_sec_derivatives(std::size_t n_max) {
    using Term = std::pair<std::size_t, std::size_t>;
    std::map<Term, Rational> f{{{0, 1}, Rational(1)}};
    std::vector<Rational> out;
    for (std::size_t n = 0;; ++n) {
        // f / y with y^2 = 1 + x^2, at x = 1
        Rational v(0);
        for (const auto& [ij, c] : f) {
            v += c * pow(Rational(2), static_cast<long>((ij.second - 1) / 2));
        }
        out.push_back(v);
        if (n == n_max) break;
        std::map<Term, Rational> g;
        for (const auto& [ij, c] : f) {
            const auto [i, j] = ij;
            if (i > 0) g[{i - 1, j + 2}] += c * Rational(i);
            g[{i + 1, j}] += c * Rational(j);
        }
        f = std::move(g);
    }
    return out;
}

VerificationReport verify_thm34(const Rational& a, const Rational& b, const Rational& c, std::size_t n_max,
                                const std::string& scope) {
    VerificationReport rep;
    rep.target = "thm34";
    rep.scope = scope;
    rep.path = "S_n(a(1+v)/(2c)) = (a/2)^n sum_k Q_{n,k}(2b/a) v^k";
    rep.n_max = n_max;
    const Triangle s = build_generic(rules::gamma_triangle(a, b, c), n_max);
    const auto qs = build_Q(Rational(2) * b / a, n_max);
    const Rational h = a / (Rational(2) * c);
    const Poly sub{h, h};
    for (std::size_t n = 0; n <= n_max; ++n) {
        const Poly lhs = row_poly(s, n).compose(sub);
        const Poly rhs = Poly(qs[n].coeffs) * pow(a / Rational(2), static_cast<long>(n));
        rep.add(static_cast<long>(n), lhs == rhs, first_difference(lhs, rhs, 'v'));
    }
    if (!(a > Rational(0) && b > Rational(0) && c > Rational(0))) {
        rep.notes.push_back("hypothesis a, b, c > 0 violated");
    }
    return rep;
}

VerificationReport verify_thm34_random(std::size_t draws, std::size_t n_max, std::uint64_t seed) {
    VerificationReport rep;
    rep.target = "thm34";
    rep.scope = "random";
    rep.path = "random positive a, b, c; one check per draw";
    rep.n_max = n_max;
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < draws; ++i) {
        const Rational a = draw_small_rational(rng, true, true);
        const Rational b = draw_small_rational(rng, true, true);
        const Rational c = draw_small_rational(rng, true, true);
        const auto f = verify_thm34(a, b, c, n_max).first_failure();
        rep.add(static_cast<long>(i), !f,
                f ? "a=" + a.to_string() + " b=" + b.to_string() + " c=" + c.to_string() + " n=" +
                        std::to_string(f->n) + " " + f->detail
                  : "",
                "draw");
    }
    rep.notes.push_back("seed " + std::to_string(seed));
    return rep;
}

namespace {

Poly thm35_rhs(const QPoly& q, const Rational& a1, bool printed_sign) {
    const std::size_t n = q.n;
    const Poly one_plus_x{1, 1};
    const Poly one_minus_x{1, -1};
    Poly acc;
    for (std::size_t k = 0; k < q.coeffs.size(); ++k) {
        const std::size_t e = printed_sign ? n - k : k;
        const Rational sign = e % 2 == 0 ? Rational(1) : Rational(-1);
        acc += (sign * q.coeffs[k]) * (one_plus_x.pow(n - 2 * k) * one_minus_x.pow(2 * k));
    }
    return acc * pow(a1 / Rational(2), static_cast<long>(n));
}

}  // namespace

VerificationReport verify_thm35(const Rational& a1, const Rational& a2, std::size_t n_max, const std::string& scope) {
    VerificationReport rep;
    rep.target = "thm35";
    rep.scope = scope;
    rep.path = "E_n(x) = (a1/2)^n sum_k (-1)^k Q_{n,k}(2a2/a1) (1+x)^(n-2k) (1-x)^(2k)";
    rep.n_max = n_max;
    const Triangle e = build_generic(rules::generalized_eulerian(a1, a2), n_max);
    const auto qs = build_Q(Rational(2) * a2 / a1, n_max);
    std::vector<long> printed_fail;
    for (std::size_t n = 0; n <= n_max; ++n) {
        const Poly lhs = row_poly(e, n);
        const Poly rhs = thm35_rhs(qs[n], a1, false);
        rep.add(static_cast<long>(n), lhs == rhs, first_difference(lhs, rhs));
        const Poly printed = thm35_rhs(qs[n], a1, true);
        if (printed != lhs) printed_fail.push_back(static_cast<long>(n));
    }
    std::string note = "sign (-1)^(n-k) read off the statement's argument sqrt(-1)/w^2: ";
    if (printed_fail.empty()) {
        note += "agrees for every n";
    } else {
        note += "differs (by the factor (-1)^n) at n =";
        for (long n : printed_fail) note += " " + std::to_string(n);
    }
    rep.notes.push_back(note);
    if (!(a1 > Rational(0) && a1 <= Rational(2) * a2)) {
        rep.notes.push_back("hypothesis 0 < a1 <= 2 a2 violated");
    }
    return rep;
}

VerificationReport verify_thm35_random(std::size_t draws, std::size_t n_max, std::uint64_t seed) {
    VerificationReport rep;
    rep.target = "thm35";
    rep.scope = "random";
    rep.path = "random 0 < a1 <= 2 a2; one check per draw";
    rep.n_max = n_max;
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < draws; ++i) {
        Rational a1 = draw_small_rational(rng, true, true);
        Rational a2 = draw_small_rational(rng, true, true);
        if (a1 > Rational(2) * a2) std::swap(a1, a2);
        if (a1 > Rational(2) * a2) a2 = a1;
        const auto f = verify_thm35(a1, a2, n_max).first_failure();
        rep.add(static_cast<long>(i), !f,
                f ? "a1=" + a1.to_string() + " a2=" + a2.to_string() + " n=" + std::to_string(f->n) + " " + f->detail
                  : "",
                "draw");
    }
    rep.notes.push_back("seed " + std::to_string(seed));
    return rep;
}

VerificationReport verify_Q_egf(const Rational& delta, std::size_t order, const std::string& scope) {
    VerificationReport rep;
    rep.target = "egf-Q";
    rep.scope = scope;
    rep.path = "(cos z - x sin z)^(-delta) via exp(-delta log), coefficient of z^n times n!";
    rep.n_max = order;
    std::vector<Poly> base(order + 1);
    for (std::size_t n = 0; n <= order; ++n) {
        const Rational inv = Rational(1) / factorial(n);
        const Rational sign = (n / 2) % 2 == 0 ? Rational(1) : Rational(-1);
        base[n] = n % 2 == 0 ? Poly::constant(sign * inv) : Poly::monomial(-sign * inv, 1);
    }
    const BiSeries rhs = BiSeries(order, base).pow(-delta);
    const auto qs = build_Q(delta, order);
    for (std::size_t n = 0; n <= order; ++n) {
        const Poly got = rhs[n] * factorial(n);
        const Poly want = qs[n].dense();
        rep.add(static_cast<long>(n), got == want, first_difference(want, got));
    }
    return rep;
}

VerificationReport verify_springer(std::size_t n_max) {
    VerificationReport rep;
    rep.target = "springer";
    rep.scope = "springer";
    rep.path = "Q_n(1,1) against repeated differentiation of sec in the (tan, sec) algebra";
    rep.n_max = n_max;
    const auto a = springer(n_max);
    const auto b = springer_via_sec_derivatives(n_max);
    for (std::size_t n = 0; n <= n_max; ++n) {
        rep.add(static_cast<long>(n), a[n] == b[n] && a[n].is_integer(),
                a[n] == b[n] ? (a[n].is_integer() ? "" : "not an integer") :
                               "Q_n(1,1)=" + a[n].to_string() + " oracle=" + b[n].to_string());
    }
    return rep;
}

}  // namespace eulertri
