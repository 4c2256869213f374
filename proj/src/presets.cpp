#include "eulertri/presets.hpp"

#include "eulertri/analysis.hpp"
#include "eulertri/david_barton.hpp"
#include "eulertri/derivative_poly.hpp"
#include "eulertri/egf.hpp"
#include "eulertri/oracles.hpp"
#include "eulertri/rules.hpp"
#include "eulertri/transforms.hpp"

#include <algorithm>
#include <map>

namespace eulertri {

nlohmann::json Shift::to_json() const {
    return {{"symbol", symbol},         {"relation", relation},           {"row_offset", row_offset},
            {"col_offset", col_offset}, {"scale", scale.to_string()}, {"reversed", reversed}};
}

namespace {

TriangleParams params(long a0, long a1, long a2, long b0, long b1, long b2, long c, long d) {
    TriangleParams p;
    p.a0 = a0;
    p.a1 = a1;
    p.a2 = a2;
    p.b0 = b0;
    p.b1 = b1;
    p.b2 = b2;
    p.c = c;
    p.d = d;
    return p;
}

VerificationReport merged(VerificationReport base, const VerificationReport& extra, const std::string& label) {
    for (const auto& c : extra.checks) {
        base.checks.push_back({c.n, c.pass, label, c.detail, c.applicable});
    }
    for (const auto& n : extra.notes) base.notes.push_back(label + ": " + n);
    return base;
}

std::vector<Rational> reversed(std::vector<Rational> v) {
    std::reverse(v.begin(), v.end());
    return v;
}

TheoremBinding thm21_binding(const std::string& id, const TriangleParams& p) {
    return {"thm21", [id, p](std::size_t n) { return verify_thm21(p, n, id); }};
}

std::vector<Preset> make_catalog() {
    std::vector<Preset> c;

    {
        Preset p;
        p.id = "eulerian-shifted";
        p.description = "shifted Eulerian numbers, (k+1) E(n-1,k) + (n-k+1) E(n-1,k-1)";
        p.construction = rules::shifted_eulerian();
        p.shift = {"<n,k>", "E(n,k) = <n+1,k+1>, permutations of [n+1] with k descents", 1, 1, 1, false};
        p.oracle = OracleBinding{1, 8, "descents over S_n", [](std::size_t n) { return oracle_eulerian(n); },
                                 [](std::size_t n) { return n - 1; }};
        const FrobeniusParams fp{1, 1, 1, 1};
        p.theorem_bindings = {
            thm21_binding(p.id, params(0, 1, 1, 1, -1, 1, 1, 0)),
            {"thm32", [fp](std::size_t n) {
                 return merged(verify_thm32(fp, n, "eulerian-shifted"), verify_formu_eulerian(n + 1), "stirling-sum");
             }},
            {"thm33", [](std::size_t n) { return verify_thm33(1, 1, 2, n, "eulerian-shifted"); }},
            {"thm35", [](std::size_t n) { return verify_thm35(1, 1, n, "eulerian-shifted"); }},
        };
        c.push_back(std::move(p));
    }
    {
        Preset p;
        p.id = "eulerian-typeB";
        p.description = "type B Eulerian numbers, (2k+1) B(n-1,k) + (2n-2k+1) B(n-1,k-1)";
        p.construction = rules::type_b_eulerian();
        p.shift = {"B", "B(n,k) = signed permutations of [n] with k type B descents", 0, 0, 1, false};
        p.oracle = OracleBinding{0, 6, "type B descents over B_n",
                                 [](std::size_t n) { return oracle_type_b(n, TypeBStatistic::descent); },
                                 [](std::size_t n) { return n; }};
        const FrobeniusParams fp{2, 1, 2, 1};
        p.theorem_bindings = {
            thm21_binding(p.id, params(0, 2, 1, 2, -2, 1, 2, 0)),
            {"thm32", [fp](std::size_t n) { return verify_thm32(fp, n, "eulerian-typeB"); }},
            {"thm33", [](std::size_t n) { return verify_thm33(2, 1, 4, n, "eulerian-typeB"); }},
            {"thm35", [](std::size_t n) { return verify_thm35(2, 1, n, "eulerian-typeB"); }},
        };
        c.push_back(std::move(p));
    }
    {
        Preset p;
        p.id = "excedance-typeB-X*";
        p.description = "reciprocal of the type A excedance triangle over B_n";
        const TriangleParams tp = params(0, 1, 0, 1, 0, 1, 1, 1);
        p.construction = tp;
        p.shift = {"X", "X*(n,k) = X(n,n-k), X(n,k) = #{pi in B_n : exc_A(pi) = k}", 0, 0, 1, true};
        p.oracle = OracleBinding{0, 6, "type A excedances over B_n, reversed",
                                 [](std::size_t n) { return reversed(oracle_type_b(n, TypeBStatistic::excedance_A)); },
                                 [](std::size_t n) { return n; }};
        p.theorem_bindings = {thm21_binding(p.id, tp)};
        c.push_back(std::move(p));
    }
    {
        Preset p;
        p.id = "staircase";
        p.description = "staircase tableaux without gamma by alpha/delta diagonal labels";
        const TriangleParams tp = params(0, 1, 1, 1, 0, 1, 1, 1);
        p.construction = tp;
        p.shift = {"T", "identity", 0, 0, 1, false};
        p.oracle = OracleBinding{0, 3, "staircase tableaux of size n", [](std::size_t n) { return oracle_staircase(n); },
                                 [](std::size_t n) { return n; }};
        p.theorem_bindings = {
            thm21_binding(p.id, tp),
            {"prop42", [](std::size_t n) { return verify_prop42(n, std::min<std::size_t>(n, 8)); }},
            {"egf-staircase", [](std::size_t n) { return verify_egf_staircase(n); }},
        };
        c.push_back(std::move(p));
    }
    {
        Preset p;
        p.id = "lambert-beta";
        p.description = "Lambert W derivative coefficients, T(n,k) = beta(n+1,k)";
        p.construction = rules::lambert_beta_shift();
        p.shift = {"beta", "T(n,k) = beta(n+1,k)", 1, 0, 1, false};
        p.oracle = OracleBinding{1, 12, "p_n polynomial recurrence",
                                 [](std::size_t n) {
                                     const auto t = oracle_lambert(n - 1);
                                     const auto r = t.row(n - 1);
                                     return std::vector<Rational>(r.begin(), r.end());
                                 },
                                 [](std::size_t n) { return n - 1; }};
        p.theorem_bindings = {
            {"prop41", [](std::size_t n) { return verify_prop41(n, std::min<std::size_t>(n, 8)); }},
        };
        c.push_back(std::move(p));
    }
    {
        Preset p;
        p.id = "lambert-beta-circ";
        p.description = "beta-circ(n,k) = beta(n+1,n-k) from its own three-term recurrence";
        TriangleParams tp = params(1, 0, 0, 2, 1, -1, -1, 1);
        p.construction = tp;
        p.shift = {"beta", "beta-circ(n,k) = beta(n+1,n-k)", 1, 0, 1, true};
        p.oracle = OracleBinding{1, 12, "p_n polynomial recurrence, reversed",
                                 [](std::size_t n) {
                                     const Triangle t = oracle_lambert(n - 1);
                                     const auto r = t.row(n - 1);
                                     return reversed(std::vector<Rational>(r.begin(), r.end()));
                                 },
                                 [](std::size_t n) { return n - 1; }};
        p.theorem_bindings = {thm21_binding(p.id, tp)};
        c.push_back(std::move(p));
    }
    {
        Preset p;
        p.id = "runs-A";
        p.description = "permutations of [n] by alternating runs, k R(n-1,k) + 2 R(n-1,k-1) + (n-k) R(n-1,k-2)";
        p.construction = rules::runs_a();
        p.shift = {"R", "identity; R_0 = 1 and R_1 = [1, 0] are seeds", 0, 0, 1, false};
        p.oracle = OracleBinding{2, 8, "alternating runs over S_n", [](std::size_t n) { return oracle_runs_A(n); },
                                 [](std::size_t n) { return n; }};
        c.push_back(std::move(p));
    }
    {
        Preset p;
        p.id = "runs-A-shifted";
        p.description = "R~(n,k) = R(n+2,k+1)/2";
        const TriangleParams tp = params(0, 1, 1, 0, 0, 2, 1, 1);
        p.construction = tp;
        p.shift = {"R", "R~(n,k) = R(n+2,k+1)/2", 2, 1, Rational(1, 2), false};
        p.oracle = OracleBinding{2, 8, "alternating runs over S_n, R(n,k+1)/2",
                                 [](std::size_t n) {
                                     const auto r = oracle_runs_A(n);
                                     std::vector<Rational> out;
                                     for (std::size_t k = 1; k + 1 <= n; ++k) out.push_back(r[k] / Rational(2));
                                     return out;
                                 },
                                 [](std::size_t n) { return n - 2; }};
        p.theorem_bindings = {
            thm21_binding(p.id, tp),
            {"thm36", [](std::size_t n) { return verify_thm36(DBInstance::make(1, 1, 1, 1), n, "runs-A-shifted"); }},
        };
        c.push_back(std::move(p));
    }
    {
        Preset p;
        p.id = "runs-typeB-Z";
        p.description = "up signed permutations by alternating runs, (2k-1) Z + 3 Z + (2n-2k+2) Z";
        p.construction = rules::runs_type_b();
        p.shift = {"Z", "identity; Z_0 = 1 and Z_1 = [0, 1] are seeds", 0, 0, 1, false};
        p.oracle = OracleBinding{0, 6, "alternating runs over up signed permutations",
                                 [](std::size_t n) { return oracle_type_b(n, TypeBStatistic::runs); },
                                 [](std::size_t n) { return n; }};
        c.push_back(std::move(p));
    }
    {
        Preset p;
        p.id = "runs-typeB-Z-shifted";
        p.description = "Z~(n,k) = Z(n+1,k+1)";
        const TriangleParams tp = params(0, 2, 1, 0, 0, 3, 2, 1);
        p.construction = tp;
        p.shift = {"Z", "Z~(n,k) = Z(n+1,k+1)", 1, 1, 1, false};
        p.oracle = OracleBinding{1, 6, "alternating runs over up signed permutations, Z(n,k+1)",
                                 [](std::size_t n) {
                                     const auto z = oracle_type_b(n, TypeBStatistic::runs);
                                     return std::vector<Rational>(z.begin() + 1, z.end());
                                 },
                                 [](std::size_t n) { return n - 1; }};
        p.theorem_bindings = {
            thm21_binding(p.id, tp),
            {"thm36",
             [](std::size_t n) { return verify_thm36(DBInstance::make(2, 1, 1, 1), n, "runs-typeB-Z-shifted"); }},
            {"prop43", [](std::size_t n) { return verify_prop43(n); }},
        };
        c.push_back(std::move(p));
    }
    {
        Preset p;
        p.id = "flower";
        p.description = "flower triangle, (k+1) A(n-1,k) + (2n-2k+1) A(n-1,k-1)";
        p.construction = rules::flower();
        p.shift = {"A", "identity", 0, 0, 1, false};
        const FrobeniusParams fp{1, 1, 2, 1};
        p.theorem_bindings = {
            {"thm31", [fp](std::size_t n) { return verify_thm31(fp, n, "flower"); }},
            {"thm32", [fp](std::size_t n) { return verify_thm32(fp, n, "flower"); }},
            {"egfF", [](std::size_t n) { return verify_egf_F(1, 1, 2, 1, n, "flower"); }},
            {"egf-flower", [](std::size_t n) { return verify_egf_flower(n); }},
        };
        c.push_back(std::move(p));
    }
    {
        Preset p;
        p.id = "petersen-Wl";
        p.description = "Petersen W^l, (2k+1) W(n-1,k) + (n-2k+1) W(n-1,k-1), k <= (n+1)/2";
        p.construction = rules::petersen_wl();
        p.shift = {"W^l", "identity", 0, 0, 1, false};
        p.theorem_bindings = {
            {"thm34", [](std::size_t n) { return verify_thm34(2, 1, 1, n, "petersen-Wl"); }},
            {"prop43", [](std::size_t n) { return verify_prop43(n); }},
        };
        c.push_back(std::move(p));
    }
    {
        Preset p;
        p.id = "frobenius-classical";
        p.description = "F(n,k) = k F(n-1,k) + k F(n-1,k-1) = k! S(n,k)";
        p.construction = rules::frobenius_classical();
        p.shift = {"F", "identity", 0, 0, 1, false};
        p.oracle = OracleBinding{0, 8, "set partitions times k!",
                                 [](std::size_t n) {
                                     std::vector<Rational> out(n + 1);
                                     for (std::size_t k = 0; k <= n; ++k) {
                                         out[k] = stirling_partition_count(n, k) * factorial(k);
                                     }
                                     return out;
                                 },
                                 [](std::size_t n) { return n; }};
        const FrobeniusParams fp{1, 0, 1, 0};
        p.theorem_bindings = {
            {"thm31", [fp](std::size_t n) { return verify_thm31(fp, n, "frobenius-classical"); }},
            {"egfF", [](std::size_t n) { return verify_egf_F(1, 0, 1, 0, n, "frobenius-classical"); }},
        };
        c.push_back(std::move(p));
    }
    {
        Preset p;
        p.id = "springer";
        p.description = "coefficients of Q_n(1,t) in t; row sums are the Springer numbers";
        p.construction = rules::derivative_dense(1);
        p.shift = {"Q", "row n, entry k = [t^k] Q_n(1,t)", 0, 0, 1, false};
        p.theorem_bindings = {
            {"egf-Q", [](std::size_t n) {
                 return merged(verify_Q_egf(1, n, "springer"), verify_springer(n), "springer-oracle");
             }},
        };
        c.push_back(std::move(p));
    }
    return c;
}

VerificationReport run_random(const std::string& target, std::size_t n_max, std::uint64_t seed) {
    if (target == "thm21") return verify_thm21_random(100, n_max, seed);
    if (target == "thm31") return verify_thm31_random(100, n_max, seed);
    if (target == "thm32") return verify_thm32_random(100, n_max, seed);
    if (target == "thm33") return verify_thm33_random(20, n_max, seed);
    if (target == "thm34") return verify_thm34_random(20, n_max, seed);
    if (target == "thm35") return verify_thm35_random(20, n_max, seed);
    if (target == "thm36") return verify_thm36_random(20, n_max, seed);
    if (target == "egfF") return verify_egf_F_random(20, n_max, seed);
    if (target == "egf-Q") {
        VerificationReport rep;
        rep.target = "egf-Q";
        rep.scope = "random";
        rep.path = "random positive delta; one check per draw";
        rep.n_max = n_max;
        std::mt19937_64 rng(seed);
        for (long i = 0; i < 10; ++i) {
            const Rational delta = draw_small_rational(rng, true, true);
            const auto f = verify_Q_egf(delta, n_max).first_failure();
            rep.add(i, !f, f ? "delta=" + delta.to_string() + " n=" + std::to_string(f->n) + " " + f->detail : "",
                    "draw");
        }
        rep.notes.push_back("seed " + std::to_string(seed));
        return rep;
    }
    throw UsageError("target '" + target + "' has no randomized form");
}

}  // namespace

const std::vector<Preset>& preset_catalog() {
    static const std::vector<Preset> catalog = make_catalog();
    return catalog;
}

const Preset& find_preset(const std::string& id) {
    for (const auto& p : preset_catalog()) {
        if (p.id == id) return p;
    }
    throw UsageError("unknown preset '" + id + "'");
}

Triangle build_preset(const Preset& p, std::size_t n_max) {
    if (const auto* tp = std::get_if<TriangleParams>(&p.construction)) {
        return build_T(*tp, n_max);
    }
    return build_generic(std::get<CoeffRule>(p.construction), n_max);
}

const std::vector<std::string>& verify_targets() {
    static const std::vector<std::string> targets{"thm21",  "thm31",  "thm32",  "thm33",        "thm34",
                                                  "thm35",  "thm36",  "prop41", "prop42",       "prop43",
                                                  "egfF",   "egf-staircase", "egf-flower", "egf-Q"};
    return targets;
}

VerificationReport run_verification(const std::string& target, const std::string& scope, std::size_t n_max,
                                    std::uint64_t seed) {
    const auto& targets = verify_targets();
    if (std::find(targets.begin(), targets.end(), target) == targets.end()) {
        throw UsageError("unknown verification target '" + target + "'");
    }
    if (scope == "random") return run_random(target, n_max, seed);
    const Preset& p = find_preset(scope);
    for (const auto& b : p.theorem_bindings) {
        if (b.target == target) return b.run(n_max);
    }
    std::string known;
    for (const auto& b : p.theorem_bindings) known += " " + b.target;
    throw UsageError("target '" + target + "' does not apply to preset '" + scope + "' (applicable:" +
                     (known.empty() ? " none" : known) + ")");
}

OracleComparison run_oracle(const Preset& p, std::size_t n) {
    if (!p.oracle) {
        throw UsageError("preset '" + p.id + "' has no enumeration oracle");
    }
    const auto& o = *p.oracle;
    if (n < o.n_min || n > o.n_max) {
        throw UsageError("oracle for '" + p.id + "' covers n in " + std::to_string(o.n_min) + ".." +
                         std::to_string(o.n_max) + ", got " + std::to_string(n));
    }
    OracleComparison out;
    out.histogram = o.histogram(n);
    const std::size_t r = o.row_of(n);
    const Triangle t = build_preset(p, r);
    const auto row = t.row(r);
    out.row.assign(row.begin(), row.end());
    const std::size_t len = std::max(out.histogram.size(), out.row.size());
    for (std::size_t k = 0; k < len; ++k) {
        const Rational a = k < out.histogram.size() ? out.histogram[k] : Rational(0);
        const Rational b = k < out.row.size() ? out.row[k] : Rational(0);
        if (a != b) out.diff.push_back(k);
    }
    return out;
}

}  // namespace eulertri
