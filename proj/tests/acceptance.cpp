#include "eulertri/analysis.hpp"
#include "eulertri/david_barton.hpp"
#include "eulertri/derivative_poly.hpp"
#include "eulertri/egf.hpp"
#include "eulertri/oracles.hpp"
#include "eulertri/presets.hpp"
#include "eulertri/rules.hpp"
#include "eulertri/transforms.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

using namespace eulertri;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = true;
    std::vector<std::string> problems;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            problems.push_back(what);
        }
    }
    void require(const VerificationReport& r, const std::string& context = {}) {
        if (r.passed()) return;
        pass = false;
        problems.push_back(context.empty() ? r.summary() : context + ": " + r.summary());
    }
};

std::vector<Rational> row_of(const Triangle& t, std::size_t n) {
    const auto r = t.row(n);
    return {r.begin(), r.end()};
}

std::vector<Rational> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

Outcome c1_type_b_runs_rows() {
    Outcome o;
    const auto z = build_generic(rules::runs_type_b(), 3);
    o.require(row_of(z, 1) == ints({0, 1}), "Z_1 != x");
    o.require(row_of(z, 2) == ints({0, 1, 3}), "Z_2 != x + 3x^2");
    o.require(row_of(z, 3) == ints({0, 1, 12, 11}), "Z_3 != x + 12x^2 + 11x^3");
    return o;
}

Outcome c2_oracles() {
    Outcome o;
    for (const auto& p : preset_catalog()) {
        if (!p.oracle) continue;
        for (std::size_t n = p.oracle->n_min; n <= p.oracle->n_max; ++n) {
            const auto cmp = run_oracle(p, n);
            o.require(cmp.diff.empty(), p.id + " differs from enumeration at n=" + std::to_string(n));
        }
    }
    const auto& eul = *find_preset("eulerian-shifted").oracle;
    const auto& typeb = *find_preset("eulerian-typeB").oracle;
    o.require(eul.n_max >= 8, "S_n oracle stops before n=8");
    o.require(typeb.n_max >= 6, "B_n oracle stops before n=6");
    return o;
}

Outcome c3_lift() {
    Outcome o;
    for (const auto* id : {"staircase", "lambert-beta-circ", "runs-A-shifted", "runs-typeB-Z-shifted",
                           "excedance-typeB-X*"}) {
        const auto& p = find_preset(id);
        o.require(verify_thm21(std::get<TriangleParams>(p.construction), 15, id));
    }
    const auto random = verify_thm21_random(100, 12, 0);
    o.require(random);
    o.require(random.checks.size() >= 100, "fewer than 100 random draws");
    return o;
}

Outcome c4_explicit_formulas() {
    Outcome o;
    o.require(verify_thm31({1, 0, 1, 0}, 12, "frobenius-classical"));
    o.require(verify_thm31({1, 1, 2, 1}, 12, "flower"));
    o.require(verify_thm31_random(100, 10, 0));
    o.require(verify_thm32({1, 1, 1, 1}, 12, "eulerian-shifted"));
    o.require(verify_thm32({2, 1, 2, 1}, 12, "eulerian-typeB"));
    o.require(verify_thm32({1, 1, 2, 1}, 12, "flower"));
    o.require(verify_thm32_random(100, 10, 0));
    o.require(verify_formu_eulerian(12));
    o.require(eulerian_via_stirling(4, 2) == Rational(11), "<4,2> from the Stirling sum is not 11");
    o.require(oracle_eulerian(4)[1] == Rational(11), "enumeration of S_4 does not give 11");
    return o;
}

Outcome c5_gamma() {
    Outcome o;
    o.require(verify_thm33(1, 1, 2, 15, "eulerian-shifted"));
    o.require(verify_thm33(2, 1, 4, 15, "eulerian-typeB"));
    return o;
}

Outcome c6_derivative() {
    Outcome o;
    o.require(verify_thm34(2, 1, 1, 12, "petersen-Wl"));
    o.require(verify_thm34_random(20, 12, 0));
    o.require(verify_thm35(1, 1, 12, "eulerian-shifted"));
    o.require(verify_thm35(2, 1, 12, "eulerian-typeB"));
    o.require(verify_thm35_random(20, 12, 0));
    o.require(verify_Q_egf(1, 12));
    o.require(verify_springer(12));
    return o;
}

Outcome c7_david_barton() {
    Outcome o;
    for (int sigma : {-1, 0, 1}) {
        for (const auto& inst : {DBInstance::make(1, 1, 1, sigma), DBInstance::make(2, 1, 1, sigma)}) {
            o.require(verify_thm36(inst, 12), inst.describe());
        }
    }
    const auto random = verify_thm36_random(20, 12, 0);
    for (const auto* label : {"sigma=-1", "sigma=0", "sigma=1"}) o.require(filter_label(random, label), label);
    o.require(filter_label(verify_prop43(12), "(iii)"));
    return o;
}

Outcome c8_egf() {
    Outcome o;
    o.require(verify_egf_F(1, 0, 1, 0, 8, "frobenius-classical"));
    o.require(verify_egf_F(1, 1, 2, 1, 8, "flower"));
    o.require(verify_egf_F_random(20, 8, 0));
    o.require(verify_egf_staircase(8));
    o.require(verify_egf_flower(8));
    return o;
}

Outcome c9_analysis() {
    Outcome o;
    o.require(filter_label(verify_prop42(12, 8), "(i)"));
    const auto lambert = verify_prop41(15, 8);
    o.require(filter_label(lambert, "(i)"));
    o.require(filter_label(lambert, "(ii)"));
    const auto z = build_T_db(DBInstance::make(2, 1, 1, 1), 12);
    for (std::size_t n = 0; n <= 12; ++n) {
        const auto p = row_poly(z, n);
        o.require(sturm_analyze(p).real_rooted, "Z~_" + std::to_string(n) + " is not real-rooted");
        o.require(log_concave(row_of(z, n)).ok, "Z~_" + std::to_string(n) + " is not log-concave");
    }
    return o;
}

Outcome c10_properties(Clock::time_point suite_start) {
    Outcome o;
    std::mt19937_64 rng(0);
    for (int i = 0; i < 100; ++i) {
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
        const auto t = build_T(p, 8);
        o.require(build_generic(master_rule(p), 8) == t, "engine mismatch for " + p.describe());
        o.require(reciprocal(reciprocal(t)) == t, "reciprocal is not an involution for " + p.describe());
    }
    o.require(verify_thm21_random(100, 10, 1));
    std::uniform_int_distribution<long> small(1, 5);
    for (int i = 0; i < 10; ++i) {
        const long a1 = small(rng), a2 = small(rng) - 1, b1 = small(rng), b2 = small(rng) - 1;
        o.require(verify_egf_F(a1, a2, b1, b2, 8));
    }
    const double elapsed = std::chrono::duration<double>(Clock::now() - suite_start).count();
    o.require(elapsed < 300.0, "suite took longer than 5 minutes");
    return o;
}

}  // namespace

int main() {
    const auto suite_start = Clock::now();
    struct Criterion {
        int id;
        std::string name;
        double budget_s;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "type B runs polynomials Z_1..Z_3", 1, c1_type_b_runs_rows},
        {2, "enumeration oracles over their full ranges", 30, c2_oracles},
        {3, "companion lift on presets (n<=15) and 100 random draws (n<=12)", 60, c3_lift},
        {4, "explicit Frobenius-type formulas and the Stirling sum (n<=12)", 0, c4_explicit_formulas},
        {5, "gamma-positivity of Eulerian and type B rows (n<=15)", 0, c5_gamma},
        {6, "derivative polynomial identities and Springer numbers (n<=12)", 0, c6_derivative},
        {7, "David-Barton substitution for sigma in {-1,0,1} (n<=12)", 0, c7_david_barton},
        {8, "EGF suite to order 8", 0, c8_egf},
        {9, "real roots, log-concavity and q-log-convexity", 0, c9_analysis},
        {10, "property suites and total wall clock", 300, [&] { return c10_properties(suite_start); }},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = Clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(Clock::now() - start).count();
        if (c.budget_s > 0 && secs >= c.budget_s) {
            std::ostringstream msg;
            msg << "took " << secs << " s, budget " << c.budget_s << " s";
            o.require(false, msg.str());
        }
        if (!o.pass) ++failed;
        std::cout << (o.pass ? "PASS" : "FAIL") << "  [" << std::setw(2) << c.id << "] " << c.name << "  ("
                  << std::fixed << std::setprecision(2) << secs << " s)";
        if (!o.pass) std::cout << "  " << o.problems.front();
        if (o.problems.size() > 1) std::cout << "  (+" << o.problems.size() - 1 << " more)";
        std::cout << '\n';
        for (std::size_t i = 1; i < o.problems.size(); ++i) std::cout << "        " << o.problems[i] << '\n';
    }
    const double total = std::chrono::duration<double>(Clock::now() - suite_start).count();
    std::cout << (10 - failed) << "/10 criteria passed in " << std::fixed << std::setprecision(2) << total
              << " s\n";
    return failed == 0 ? 0 : 1;
}
