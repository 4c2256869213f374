#include "eulertri/analysis.hpp"

#include "eulertri/egf.hpp"
#include "eulertri/rules.hpp"
#include "eulertri/transforms.hpp"
#include "eulertri/triangle.hpp"

#include <algorithm>
#include <stdexcept>

namespace eulertri {

namespace {

Poly exact_div(const Poly& a, const Poly& b) { return divmod(a, b).first; }

int sign_at(const Poly& p, const Rational& x) { return p.eval(x).sign(); }

std::size_t variations(const std::vector<int>& signs) {
    std::size_t v = 0;
    int last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

std::size_t variations_at(const std::vector<Poly>& chain, const Rational& x) {
    std::vector<int> s;
    s.reserve(chain.size());
    for (const auto& p : chain) s.push_back(sign_at(p, x));
    return variations(s);
}

std::size_t variations_at_infinity(const std::vector<Poly>& chain, bool positive) {
    std::vector<int> s;
    for (const auto& p : chain) {
        int sg = p.leading().sign();
        if (!positive && p.degree() % 2 == 1) sg = -sg;
        s.push_back(sg);
    }
    return variations(s);
}

std::size_t distinct_real_roots(const std::vector<Poly>& chain) {
    return variations_at_infinity(chain, false) - variations_at_infinity(chain, true);
}

Poly squarefree_part(const Poly& p) {
    if (p.degree() <= 0) return p;
    return exact_div(p, gcd(p, p.derivative())).monic();
}

Rational cauchy_bound(const Poly& p) {
    Rational m(0);
    for (int i = 0; i < p.degree(); ++i) {
        m = std::max(m, abs(p[static_cast<std::size_t>(i)] / p.leading()));
    }
    return m + Rational(1);
}

// distinct roots in (lo, hi]
std::vector<Interval> isolate(const Poly& sf) {
    std::vector<Interval> out;
    if (sf.degree() <= 0) return out;
    const auto chain = sturm_chain(sf);
    const Rational b = cauchy_bound(sf);
    std::vector<Interval> work{{-b, b}};
    while (!work.empty()) {
        const Interval iv = work.back();
        work.pop_back();
        const std::size_t c = variations_at(chain, iv.lo) - variations_at(chain, iv.hi);
        if (c == 0) continue;
        if (c == 1) {
            out.push_back(iv);
            continue;
        }
        const Rational mid = (iv.lo + iv.hi) / Rational(2);
        work.push_back({iv.lo, mid});
        work.push_back({mid, iv.hi});
    }
    std::sort(out.begin(), out.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    return out;
}

}  // namespace

std::vector<Poly> squarefree_decomposition(const Poly& p) {
    std::vector<Poly> out;
    if (p.degree() <= 0) return out;
    const Poly f = p.monic();
    const Poly a0 = gcd(f, f.derivative());
    Poly b = exact_div(f, a0);
    Poly c = exact_div(f.derivative(), a0);
    Poly d = c - b.derivative();
    while (b.degree() > 0) {
        const Poly a = gcd(b, d);
        out.push_back(a);
        b = exact_div(b, a);
        c = exact_div(d, a);
        d = c - b.derivative();
    }
    return out;
}

std::vector<Poly> sturm_chain(const Poly& p) {
    std::vector<Poly> chain{p};
    if (p.degree() <= 0) return chain;
    chain.push_back(p.derivative());
    while (chain.back().degree() > 0) {
        Poly r = -divmod(chain[chain.size() - 2], chain.back()).second;
        if (r.is_zero()) break;
        chain.push_back(std::move(r));
    }
    return chain;
}

std::size_t count_roots_closed(const std::vector<Poly>& chain, const Rational& lo, const Rational& hi) {
    if (hi < lo) return 0;
    std::size_t n = variations_at(chain, lo) - variations_at(chain, hi);
    if (chain.front().eval(lo).is_zero()) ++n;
    return n;
}

RootReport sturm_analyze(const Poly& p, const std::optional<Interval>& interval) {
    if (p.is_zero()) {
        throw std::invalid_argument("sturm_analyze: the zero polynomial has no root count");
    }
    RootReport r;
    r.degree = static_cast<std::size_t>(p.degree());
    std::size_t in_interval = 0;
    const auto factors = squarefree_decomposition(p);
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (factors[i].degree() <= 0) continue;
        const auto chain = sturm_chain(factors[i]);
        const std::size_t c = distinct_real_roots(chain);
        r.distinct_real += c;
        r.root_count_total += (i + 1) * c;
        if (interval) in_interval += (i + 1) * count_roots_closed(chain, interval->lo, interval->hi);
    }
    r.real_rooted = r.root_count_total == r.degree;
    if (interval) r.roots_in_interval = in_interval;
    r.isolating_intervals = isolate(squarefree_part(p));
    return r;
}

LogConcavity log_concave(const std::vector<Rational>& seq) {
    for (std::size_t k = 0; k + 2 < seq.size(); ++k) {
        if (seq[k] * seq[k + 2] > seq[k + 1] * seq[k + 1]) return {false, k};
    }
    return {};
}

bool interlacing(const Poly& p, const Poly& q) {
    if (!sturm_analyze(p).real_rooted || !sturm_analyze(q).real_rooted) {
        throw std::invalid_argument("interlacing: both polynomials must be real-rooted");
    }
    const Poly g = gcd(p, q);
    const Poly sp = squarefree_part(exact_div(p, g));
    const Poly sq = squarefree_part(exact_div(q, g));
    const auto chain_p = sturm_chain(sp);
    std::vector<bool> owner;  // true: root of p
    for (const auto& iv : isolate(sp * sq)) {
        const bool of_p = sp.degree() > 0 && variations_at(chain_p, iv.lo) - variations_at(chain_p, iv.hi) == 1;
        owner.push_back(of_p);
    }
    for (std::size_t i = 1; i < owner.size(); ++i) {
        if (owner[i] == owner[i - 1]) return false;
    }
    return true;
}

QLogConvexityReport strong_q_log_convex(const std::vector<Poly>& polys, std::size_t n_max) {
    if (polys.size() < n_max + 2) {
        throw std::invalid_argument("strong_q_log_convex: need polynomials up to index n_max + 1");
    }
    QLogConvexityReport r;
    r.n_max = n_max;
    for (std::size_t n = 1; n <= n_max; ++n) {
        for (std::size_t m = 1; m <= n; ++m) {
            const Poly diff = polys[n + 1] * polys[m - 1] - polys[n] * polys[m];
            for (std::size_t k = 0; k < diff.coeffs().size(); ++k) {
                if (diff[k].sign() < 0) {
                    r.verdict = false;
                    r.witness = QLogConvexityReport::Witness{n, m, k, diff[k]};
                    return r;
                }
            }
        }
    }
    return r;
}

StructureSummary structure_summary(const Poly& p) {
    StructureSummary s;
    if (p.is_zero()) {
        s.symmetric = true;
        s.unimodal = true;
        return s;
    }
    std::size_t low = 0;
    while (p[low].is_zero()) ++low;
    const auto high = static_cast<std::size_t>(p.degree());
    s.symmetric = true;
    for (std::size_t i = low; i <= high; ++i) {
        if (p[i] != p[high + low - i]) {
            s.symmetric = false;
            break;
        }
    }
    bool descending = false;
    s.unimodal = true;
    for (std::size_t i = low; i < high; ++i) {
        const int step = (p[i + 1] - p[i]).sign();
        if (step < 0) descending = true;
        if (step > 0 && descending) {
            s.unimodal = false;
            break;
        }
    }
    if (s.symmetric) {
        s.center = Rational(static_cast<long>(low + high), 2);
        std::vector<Rational> shifted(p.coeffs().begin() + static_cast<long>(low), p.coeffs().end());
        const auto outcome = gamma_decompose(Poly(shifted), high - low);
        if (outcome.gamma) {
            s.gamma = outcome.gamma->entries;
            s.gamma_nonneg = outcome.gamma->nonnegative();
        }
    }
    return s;
}

VerificationReport verify_prop41(std::size_t n_max, std::size_t q_n_max) {
    VerificationReport rep;
    rep.target = "prop41";
    rep.scope = "lambert-beta";
    rep.path = "rows of T(n,k) = beta(n+1,k): (i) positive, (ii) log-concave, (iii) strong q-log-convexity of beta_n(q); "
               "reciprocal equals the beta-circ recurrence";
    rep.n_max = n_max;
    const std::size_t depth = std::max(n_max, q_n_max + 1);
    const Triangle beta = build_generic(rules::lambert_beta_shift(), depth);
    for (std::size_t n = 0; n <= n_max; ++n) {
        const auto row = beta.row(n);
        const auto it = std::find_if(row.begin(), row.end(), [](const Rational& v) { return v.sign() <= 0; });
        rep.add(static_cast<long>(n), it == row.end(),
                it == row.end() ? "" : "entry k=" + std::to_string(it - row.begin()) + " is " + it->to_string(),
                "(i)");
        const auto lc = log_concave(std::vector<Rational>(row.begin(), row.end()));
        rep.add(static_cast<long>(n), lc.ok, lc.ok ? "" : "fails at k=" + std::to_string(*lc.witness), "(ii)");
    }
    std::vector<Poly> polys;
    for (std::size_t n = 0; n <= depth; ++n) polys.push_back(row_poly(beta, n));
    const auto q = strong_q_log_convex(polys, q_n_max);
    std::string detail;
    if (q.witness) {
        detail = "n=" + std::to_string(q.witness->n) + " m=" + std::to_string(q.witness->m) + " coefficient of q^" +
                 std::to_string(q.witness->k) + " is " + q.witness->coefficient.to_string();
    }
    rep.add(static_cast<long>(q_n_max), q.verdict, detail, "(iii)");

    TriangleParams circ;
    circ.a0 = 1;
    circ.b0 = 2;
    circ.b1 = 1;
    circ.b2 = -1;
    circ.c = -1;
    circ.d = 1;
    const Triangle direct = build_T(circ, n_max);
    const Triangle recip = reciprocal(beta);
    for (std::size_t n = 0; n <= n_max; ++n) {
        const Poly a = row_poly(direct, n);
        const Poly b = row_poly(recip, n);
        rep.add(static_cast<long>(n), a == b, first_difference(a, b), "reciprocal");
    }
    return rep;
}

VerificationReport verify_prop42(std::size_t n_max, std::size_t egf_order) {
    VerificationReport rep;
    rep.target = "prop42";
    rep.scope = "staircase";
    rep.path = "(i) real zeros in [-1, 0] and log-concave, (ii) triple-sum explicit formula, (iii) EGF";
    rep.n_max = n_max;
    TriangleParams p;
    p.a1 = 1;
    p.a2 = 1;
    p.b0 = 1;
    p.b2 = 1;
    p.c = 1;
    p.d = 1;
    const Triangle t = build_T(p, n_max);
    for (std::size_t n = 0; n <= n_max; ++n) {
        const Poly tn = row_poly(t, n);
        const auto roots = sturm_analyze(tn, Interval{-1, 0});
        const auto lc = log_concave(std::vector<Rational>(tn.coeffs().begin(), tn.coeffs().end()));
        std::string bad;
        if (!roots.real_rooted) bad = "not real-rooted";
        else if (*roots.roots_in_interval != roots.degree) bad = "a root lies outside [-1, 0]";
        else if (!lc.ok) bad = "not log-concave at k=" + std::to_string(*lc.witness);
        rep.add(static_cast<long>(n), bad.empty(), bad, "(i)");
    }
    for (std::size_t n = 0; n <= n_max; ++n) {
        std::string bad;
        for (std::size_t m = 0; m <= n && bad.empty(); ++m) {
            Rational acc(0);
            for (std::size_t k = 0; k <= m; ++k) {
                for (std::size_t i = 0; i <= k; ++i) {
                    const Rational outer = binomial(n - k, m - k) * binomial(n - i, k - i) *
                                           rational_binomial(Rational(1, 2) + Rational(i), i) *
                                           pow(Rational(-2), static_cast<long>(k));
                    if (outer.is_zero()) continue;
                    for (std::size_t j = 0; j <= i; ++j) {
                        Rational term = outer * binomial(i, j) * pow(Rational(1 + j), static_cast<long>(n));
                        if (j % 2 == 1) term = -term;
                        acc += term;
                    }
                }
            }
            const Rational want = t.at(static_cast<long>(n), static_cast<long>(m));
            if (acc != want) {
                bad = "m=" + std::to_string(m) + ": formula=" + acc.to_string() + " recurrence=" + want.to_string();
            }
        }
        rep.add(static_cast<long>(n), bad.empty(), bad, "(ii)");
    }
    for (const auto& c : verify_egf_staircase(egf_order).checks) {
        rep.checks.push_back({c.n, c.pass, "(iii)", c.detail, c.applicable});
    }
    return rep;
}

}  // namespace eulertri
