#include "eulertri/transforms.hpp"

#include "eulertri/rules.hpp"

#include <sstream>
#include <stdexcept>

namespace eulertri {

namespace {

Poly as_poly(const std::vector<Rational>& v) { return Poly(v); }

std::string row_detail(const Poly& lhs, const Poly& rhs) { return first_difference(lhs, rhs); }

}  // namespace

std::vector<Rational> lift_A_to_T(const Triangle& a, const Rational& lambda, const Rational& d, std::size_t n) {
    const auto row = a.row(n);
    std::vector<Rational> out(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        Rational acc(0);
        for (std::size_t i = 0; i <= k && i < row.size(); ++i) {
            if (row[i].is_zero()) continue;
            acc += row[i] * binomial(n - i, k - i) * pow(lambda, static_cast<long>(n - k)) *
                   pow(d, static_cast<long>(k - i));
        }
        out[k] = acc;
    }
    return out;
}

VerificationReport verify_thm21(const TriangleParams& params, std::size_t n_max, const std::string& scope) {
    VerificationReport rep;
    rep.target = "thm21";
    rep.scope = scope;
    rep.path = "T_n(x) = (lambda + d x)^n A_n(x/(lambda + d x)) and the binomial lift formula";
    rep.n_max = n_max;
    const Triangle t = build_T(params, n_max);
    const Triangle a = build_A(params, n_max);
    for (std::size_t n = 0; n <= n_max; ++n) {
        const Poly lhs = row_poly(t, n);
        const Poly lifted = poly_compose_linear_lift(row_poly(a, n), n, params.lambda, params.d);
        const Poly coeffwise = as_poly(lift_A_to_T(a, params.lambda, params.d, n));
        if (lhs != lifted) {
            rep.add(static_cast<long>(n), false, "functional lift: " + row_detail(lhs, lifted));
        } else if (lhs != coeffwise) {
            rep.add(static_cast<long>(n), false, "coefficient lift: " + row_detail(lhs, coeffwise));
        } else {
            rep.add(static_cast<long>(n), true);
        }
    }
    if (!params.strict()) {
        rep.notes.push_back("parameters outside the nonnegative region: " + params.describe());
    }
    return rep;
}

Rational draw_small_rational(std::mt19937_64& rng, bool nonzero, bool positive) {
    std::uniform_int_distribution<long> num(positive ? 1 : -10, 10);
    std::uniform_int_distribution<long> den(1, 10);
    long p = num(rng);
    while (nonzero && p == 0) {
        p = num(rng);
    }
    return Rational(p, den(rng));
}

TriangleParams draw_compatible_params(std::mt19937_64& rng) {
    TriangleParams p;
    p.lambda = draw_small_rational(rng, true);
    p.a0 = draw_small_rational(rng);
    p.a1 = draw_small_rational(rng);
    p.a2 = draw_small_rational(rng);
    p.b0 = draw_small_rational(rng);
    p.b2 = draw_small_rational(rng);
    p.c = draw_small_rational(rng);
    p.d = draw_small_rational(rng);
    p.b1 = p.d * p.a1 - p.c;
    return p;
}

VerificationReport verify_thm21_random(std::size_t draws, std::size_t n_max, std::uint64_t seed) {
    VerificationReport rep;
    rep.target = "thm21";
    rep.scope = "random";
    rep.path = "random compatible parameters, both lift paths, one check per draw";
    rep.n_max = n_max;
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < draws; ++i) {
        const TriangleParams p = draw_compatible_params(rng);
        const auto sub = verify_thm21(p, n_max);
        const auto f = sub.first_failure();
        rep.add(static_cast<long>(i), !f, f ? p.describe() + " n=" + std::to_string(f->n) + " " + f->detail : "",
                "draw");
    }
    rep.notes.push_back("seed " + std::to_string(seed));
    return rep;
}

void FrobeniusParams::validate() const {
    if (a1.is_zero() || b1.is_zero()) {
        throw std::invalid_argument("Frobenius parameters need a1 != 0 and b1 != 0 (" + describe() + ")");
    }
}

std::string FrobeniusParams::describe() const {
    std::ostringstream os;
    os << "a1=" << a1 << " a2=" << a2 << " b1=" << b1 << " b2=" << b2;
    return os.str();
}

Rational frobenius_explicit(const FrobeniusParams& p, std::size_t n, std::size_t k) {
    p.validate();
    Rational sum(0);
    for (std::size_t j = 0; j <= k; ++j) {
        Rational term = binomial(k, j) * pow(p.a2 + p.a1 * Rational(j), static_cast<long>(n));
        if ((k - j) % 2 == 1) term = -term;
        sum += term;
    }
    return rational_binomial(p.b2 / p.b1 + Rational(k), k) * pow(p.b1 / p.a1, static_cast<long>(k)) * sum;
}

VerificationReport verify_thm31(const FrobeniusParams& p, std::size_t n_max, const std::string& scope) {
    p.validate();
    VerificationReport rep;
    rep.target = "thm31";
    rep.scope = scope;
    rep.path = "explicit formula against the two-term recurrence, entrywise";
    rep.n_max = n_max;
    const Triangle f = build_generic(rules::frobenius(p.a1, p.a2, p.b1, p.b2), n_max);
    for (std::size_t n = 0; n <= n_max; ++n) {
        std::string bad;
        for (std::size_t k = 0; k <= n && bad.empty(); ++k) {
            const Rational e = frobenius_explicit(p, n, k);
            if (e != f.at(static_cast<long>(n), static_cast<long>(k))) {
                bad = "k=" + std::to_string(k) + ": recurrence=" + f.at(static_cast<long>(n), static_cast<long>(k)).to_string() +
                      " explicit=" + e.to_string();
            }
        }
        rep.add(static_cast<long>(n), bad.empty(), bad);
    }
    return rep;
}

namespace {

FrobeniusParams draw_frobenius(std::mt19937_64& rng) {
    FrobeniusParams p;
    p.a1 = draw_small_rational(rng, true);
    p.a2 = draw_small_rational(rng);
    p.b1 = draw_small_rational(rng, true);
    p.b2 = draw_small_rational(rng);
    return p;
}

template <typename Fn>
VerificationReport random_frobenius_report(const std::string& target, std::size_t draws, std::size_t n_max,
                                           std::uint64_t seed, Fn fn) {
    VerificationReport rep;
    rep.target = target;
    rep.scope = "random";
    rep.path = "random nonzero a1, b1; one check per draw";
    rep.n_max = n_max;
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < draws; ++i) {
        const FrobeniusParams p = draw_frobenius(rng);
        const auto sub = fn(p);
        const auto f = sub.first_failure();
        rep.add(static_cast<long>(i), !f, f ? p.describe() + " n=" + std::to_string(f->n) + " " + f->detail : "",
                "draw");
    }
    rep.notes.push_back("seed " + std::to_string(seed));
    return rep;
}

}  // namespace

VerificationReport verify_thm31_random(std::size_t draws, std::size_t n_max, std::uint64_t seed) {
    return random_frobenius_report("thm31", draws, n_max, seed,
                                   [n_max](const FrobeniusParams& p) { return verify_thm31(p, n_max); });
}

Triangle build_F_shifted(const FrobeniusParams& p, std::size_t n_max) {
    p.validate();
    const Rational mid0 = p.b2 - p.b1 + p.a2 / p.a1 * p.b1;
    return build_generic(rules::two_term("frobenius-shifted{" + p.describe() + "}", {p.a2, 0, p.a1}, {mid0, 0, p.b1}),
                         n_max);
}

VerificationReport verify_thm32(const FrobeniusParams& p, std::size_t n_max, const std::string& scope) {
    p.validate();
    VerificationReport rep;
    rep.target = "thm32";
    rep.scope = scope;
    rep.path = "D_n(q) = (1 - (b1/a1) q)^n F_n(q/(1 - (b1/a1) q)), binomial sum, and shifted explicit formula";
    rep.n_max = n_max;
    const Triangle dd = build_generic(rules::eulerian_frobenius(p.a1, p.a2, p.b1, p.b2), n_max);
    const Triangle ff = build_F_shifted(p, n_max);
    const Rational ratio = p.b1 / p.a1;
    const Rational top = p.a2 / p.a1 + p.b2 / p.b1 - Rational(1);
    for (std::size_t n = 0; n <= n_max; ++n) {
        const Poly lhs = row_poly(dd, n);
        std::string bad;
        const Poly functional = poly_compose_linear_lift(row_poly(ff, n), n, Rational(1), -ratio);
        if (lhs != functional) bad = "functional form: " + first_difference(lhs, functional);
        for (std::size_t k = 0; k <= n && bad.empty(); ++k) {
            Rational acc(0);
            for (std::size_t i = 0; i <= k; ++i) {
                acc += ff.at(static_cast<long>(n), static_cast<long>(i)) * binomial(n - i, k - i) *
                       pow(-ratio, static_cast<long>(k - i));
            }
            if (acc != dd.at(static_cast<long>(n), static_cast<long>(k))) {
                bad = "binomial sum k=" + std::to_string(k) + ": D=" +
                      dd.at(static_cast<long>(n), static_cast<long>(k)).to_string() + " sum=" + acc.to_string();
            }
        }
        for (std::size_t i = 0; i <= n && bad.empty(); ++i) {
            Rational s(0);
            for (std::size_t j = 0; j <= i; ++j) {
                Rational term = binomial(i, j) * pow(p.a2 + p.a1 * Rational(j), static_cast<long>(n));
                if ((i - j) % 2 == 1) term = -term;
                s += term;
            }
            const Rational e = rational_binomial(top + Rational(i), i) * pow(ratio, static_cast<long>(i)) * s;
            if (e != ff.at(static_cast<long>(n), static_cast<long>(i))) {
                bad = "explicit F i=" + std::to_string(i) + ": recurrence=" +
                      ff.at(static_cast<long>(n), static_cast<long>(i)).to_string() + " explicit=" + e.to_string();
            }
        }
        rep.add(static_cast<long>(n), bad.empty(), bad);
    }
    return rep;
}

VerificationReport verify_thm32_random(std::size_t draws, std::size_t n_max, std::uint64_t seed) {
    return random_frobenius_report("thm32", draws, n_max, seed,
                                   [n_max](const FrobeniusParams& p) { return verify_thm32(p, n_max); });
}

Rational eulerian_via_stirling(std::size_t n, std::size_t k) {
    const FrobeniusParams classical{1, 0, 1, 0};
    Rational acc(0);
    for (std::size_t i = 0; i <= k && i <= n; ++i) {
        Rational term = frobenius_explicit(classical, n, i) * binomial(n - i, k - i);
        if ((k - i) % 2 == 1) term = -term;
        acc += term;
    }
    return acc;
}

VerificationReport verify_formu_eulerian(std::size_t n_max) {
    VerificationReport rep;
    rep.target = "formu-eulerian";
    rep.scope = "eulerian-shifted";
    rep.path = "<n,k> via the Stirling sum equals shifted Eulerian row n-1 at k-1";
    rep.n_max = n_max;
    const Triangle e = build_generic(rules::shifted_eulerian(), n_max);
    for (std::size_t n = 1; n <= n_max; ++n) {
        std::string bad;
        for (std::size_t k = 1; k <= n && bad.empty(); ++k) {
            const Rational v = eulerian_via_stirling(n, k);
            const Rational want = e.at(static_cast<long>(n - 1), static_cast<long>(k - 1));
            if (v != want) {
                bad = "k=" + std::to_string(k) + ": stirling sum=" + v.to_string() + " recurrence=" + want.to_string();
            }
        }
        rep.add(static_cast<long>(n), bad.empty(), bad);
    }
    return rep;
}

bool GammaVector::nonnegative() const {
    for (const auto& g : entries) {
        if (g.sign() < 0) return false;
    }
    return true;
}

GammaOutcome gamma_decompose(const Poly& p, std::size_t n) {
    if (p.degree() > static_cast<int>(n)) {
        throw std::invalid_argument("gamma_decompose: degree " + std::to_string(p.degree()) + " exceeds n = " +
                                    std::to_string(n));
    }
    GammaOutcome out;
    GammaVector g;
    g.n = n;
    g.entries.resize(n / 2 + 1);
    Poly rest = p;
    const Poly one_plus_x{1, 1};
    for (std::size_t k = 0; k <= n / 2; ++k) {
        // x^k (1+x)^(n-2k) is monic of degree n-k
        const Rational lead = rest[n - k];
        g.entries[k] = lead;
        if (!lead.is_zero()) {
            rest -= Poly::monomial(lead, k) * one_plus_x.pow(n - 2 * k);
        }
    }
    if (!rest.is_zero()) {
        out.residual = rest;
        out.reason = "not symmetric about n/2 = " + Rational(static_cast<long>(n), 2).to_string() +
                     ", residual " + rest.to_string();
        return out;
    }
    out.gamma = std::move(g);
    return out;
}

Poly reconstruct(const GammaVector& g) {
    Poly out;
    const Poly one_plus_x{1, 1};
    for (std::size_t k = 0; k < g.entries.size(); ++k) {
        if (g.entries[k].is_zero()) continue;
        out += Poly::monomial(g.entries[k], k) * one_plus_x.pow(g.n - 2 * k);
    }
    return out;
}

VerificationReport verify_thm33(const Rational& a1, const Rational& a2, const Rational& c, std::size_t n_max,
                                const std::string& scope) {
    if (c.is_zero()) {
        throw std::invalid_argument("verify_thm33: c must be nonzero");
    }
    VerificationReport rep;
    rep.target = "thm33";
    rep.scope = scope;
    rep.path = "E_n(x) = sum_k S(n,k) (2a1/c)^k x^k (1+x)^(n-2k); gamma_decompose(E_n) = S scaled; S >= 0";
    rep.n_max = n_max;
    const Triangle e = build_generic(rules::generalized_eulerian(a1, a2), n_max);
    const Triangle s = build_generic(rules::gamma_triangle(a1, a2, c), n_max);
    const Rational scale = Rational(2) * a1 / c;
    const Poly one_plus_x{1, 1};
    for (std::size_t n = 0; n <= n_max; ++n) {
        const Poly lhs = row_poly(e, n);
        Poly rhs;
        for (std::size_t k = 0; 2 * k <= n; ++k) {
            rhs += Poly::monomial(s.at(static_cast<long>(n), static_cast<long>(k)) * pow(scale, static_cast<long>(k)), k) *
                   one_plus_x.pow(n - 2 * k);
        }
        std::string bad;
        if (lhs != rhs) bad = "identity: " + first_difference(lhs, rhs);
        if (bad.empty()) {
            const auto outcome = gamma_decompose(lhs, n);
            if (!outcome.gamma) {
                bad = "gamma_decompose failed: " + outcome.reason;
            } else {
                for (std::size_t k = 0; k < outcome.gamma->entries.size() && bad.empty(); ++k) {
                    const Rational want = s.at(static_cast<long>(n), static_cast<long>(k)) * pow(scale, static_cast<long>(k));
                    if (outcome.gamma->entries[k] != want) {
                        bad = "gamma k=" + std::to_string(k) + ": " + outcome.gamma->entries[k].to_string() +
                              " vs S scaled " + want.to_string();
                    }
                }
                if (bad.empty() && !outcome.gamma->nonnegative()) bad = "gamma has a negative entry";
            }
        }
        for (std::size_t k = 0; k <= n && bad.empty(); ++k) {
            if (s.at(static_cast<long>(n), static_cast<long>(k)).sign() < 0) {
                bad = "S(" + std::to_string(n) + "," + std::to_string(k) + ") < 0";
            }
        }
        rep.add(static_cast<long>(n), bad.empty(), bad);
    }
    if (!(a1 > Rational(0) && a2 > Rational(0) && c > Rational(0))) {
        rep.notes.push_back("hypothesis a1, a2, c > 0 violated; nonnegativity checks may fail legitimately");
    }
    return rep;
}

VerificationReport verify_thm33_random(std::size_t draws, std::size_t n_max, std::uint64_t seed) {
    VerificationReport rep;
    rep.target = "thm33";
    rep.scope = "random";
    rep.path = "random positive a1, a2, c; one check per draw";
    rep.n_max = n_max;
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < draws; ++i) {
        const Rational a1 = draw_small_rational(rng, true, true);
        const Rational a2 = draw_small_rational(rng, true, true);
        const Rational c = draw_small_rational(rng, true, true);
        const auto sub = verify_thm33(a1, a2, c, n_max);
        const auto f = sub.first_failure();
        rep.add(static_cast<long>(i), !f,
                f ? "a1=" + a1.to_string() + " a2=" + a2.to_string() + " c=" + c.to_string() + " n=" +
                        std::to_string(f->n) + " " + f->detail
                  : "",
                "draw");
    }
    rep.notes.push_back("seed " + std::to_string(seed));
    return rep;
}

}  // namespace eulertri
