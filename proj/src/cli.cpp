#include "eulertri/cli.hpp"

#include "eulertri/analysis.hpp"
#include "eulertri/presets.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <climits>
#include <fstream>
#include <future>
#include <sstream>

namespace eulertri {

nlohmann::json rational_to_json(const Rational& r) {
    if (r.is_integer()) {
        const mpz_class z = r.numerator();
        if (z.fits_slong_p() && sizeof(long) == 8) return static_cast<std::int64_t>(z.get_si());
    }
    return r.to_string();
}

Rational rational_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    throw std::invalid_argument("expected an integer or a \"p/q\" string, got " + j.dump());
}

std::string triangle_to_csv(const Triangle& t) {
    std::ostringstream os;
    for (const auto& row : t.rows()) {
        for (std::size_t k = 0; k < row.size(); ++k) {
            if (k) os << ',';
            os << row[k];
        }
        os << '\n';
    }
    return os.str();
}

Triangle triangle_from_csv(const std::string& text) {
    std::vector<std::vector<Rational>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<Rational> row;
        std::istringstream cells(line);
        std::string cell;
        while (std::getline(cells, cell, ',')) row.push_back(Rational::parse(cell));
        rows.push_back(std::move(row));
    }
    return Triangle(std::move(rows), "csv");
}

nlohmann::json triangle_to_json(const std::string& preset, const Triangle& t) {
    auto rows = nlohmann::json::array();
    for (const auto& row : t.rows()) {
        auto r = nlohmann::json::array();
        for (const auto& v : row) r.push_back(rational_to_json(v));
        rows.push_back(std::move(r));
    }
    return {{"preset", preset}, {"n_max", t.depth()}, {"rows", std::move(rows)}};
}

Triangle triangle_from_json(const nlohmann::json& j) {
    std::vector<std::vector<Rational>> rows;
    for (const auto& r : j.at("rows")) {
        std::vector<Rational> row;
        for (const auto& v : r) row.push_back(rational_from_json(v));
        rows.push_back(std::move(row));
    }
    return Triangle(std::move(rows), "json");
}

namespace {

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

nlohmann::json rationals_json(const std::vector<Rational>& v) {
    auto a = nlohmann::json::array();
    for (const auto& r : v) a.push_back(rational_to_json(r));
    return a;
}

struct Options {
    std::string preset;
    std::size_t n_max = 0;
    std::string format = "json";
    std::string checks;
    std::uint64_t seed = 0;
    std::string out_path;
    std::string target;
};

int cmd_gen(const Options& o, std::ostream& out) {
    const Preset& p = find_preset(o.preset);
    const Triangle t = build_preset(p, o.n_max);
    if (o.format == "csv") {
        out << triangle_to_csv(t);
    } else {
        auto j = triangle_to_json(p.id, t);
        j["shift"] = p.shift.to_json();
        out << j.dump() << '\n';
    }
    return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
    const auto targets = split_commas(o.target);
    if (targets.empty()) throw UsageError("verify: no target given");
    for (const auto& t : targets) {
        const auto& known = verify_targets();
        if (std::find(known.begin(), known.end(), t) == known.end()) {
            throw UsageError("unknown verification target '" + t + "'");
        }
    }
    std::vector<std::future<VerificationReport>> jobs;
    for (const auto& t : targets) {
        jobs.push_back(std::async(std::launch::async,
                                  [t, &o] { return run_verification(t, o.preset, o.n_max, o.seed); }));
    }
    bool ok = true;
    auto all = nlohmann::json::array();
    for (auto& j : jobs) {
        const auto rep = j.get();
        ok = ok && rep.passed();
        all.push_back(rep.to_json());
    }
    out << (all.size() == 1 ? all[0] : all).dump(2) << '\n';
    return ok ? 0 : 1;
}

const std::vector<std::string> kChecks{"real-rooted", "root-interval", "log-concave", "interlace",
                                       "qlogconvex",  "gamma",         "symmetry"};

int cmd_analyze(const Options& o, std::ostream& out) {
    const Preset& p = find_preset(o.preset);
    auto checks = split_commas(o.checks.empty() ? "real-rooted,log-concave" : o.checks);
    for (const auto& c : checks) {
        if (std::find(kChecks.begin(), kChecks.end(), c) == kChecks.end()) {
            throw UsageError("unknown check '" + c + "'");
        }
    }
    const Triangle t = build_preset(p, o.n_max + 1);
    std::vector<Poly> polys;
    for (std::size_t n = 0; n <= o.n_max + 1; ++n) polys.push_back(row_poly(t, n));

    std::optional<Interval> root_interval;
    std::string interval_note;
    if (const auto* tp = std::get_if<TriangleParams>(&p.construction); tp && !tp->d.is_zero()) {
        root_interval = Interval{-tp->lambda / tp->d, 0};
        interval_note = "[-lambda/d, 0]";
    }

    bool ok = true;
    nlohmann::json results;
    for (const auto& c : checks) {
        auto rows = nlohmann::json::array();
        if (c == "qlogconvex") {
            const auto q = strong_q_log_convex(polys, o.n_max);
            nlohmann::json e{{"status", q.verdict ? "pass" : "fail"}};
            if (q.witness) {
                e["witness"] = {{"n", q.witness->n}, {"m", q.witness->m}, {"k", q.witness->k},
                                {"coefficient", rational_to_json(q.witness->coefficient)}};
            }
            ok = ok && q.verdict;
            results[c] = e;
            continue;
        }
        for (std::size_t n = 0; n <= o.n_max; ++n) {
            const Poly& pn = polys[n];
            nlohmann::json e{{"n", n}};
            std::string status = "pass";
            if (pn.is_zero()) {
                status = "n/a";
                e["detail"] = "zero row";
            } else if (c == "real-rooted") {
                const auto r = sturm_analyze(pn);
                if (!r.real_rooted) status = "fail";
                e["real_roots"] = r.root_count_total;
                e["degree"] = r.degree;
            } else if (c == "root-interval") {
                Interval iv{0, 0};
                if (root_interval) {
                    iv = *root_interval;
                } else {
                    Rational bound(1);
                    for (const auto& v : pn.coeffs()) bound += abs(v / pn.leading());
                    iv = Interval{-bound, 0};
                    interval_note = "(-inf, 0]";
                }
                const auto r = sturm_analyze(pn, iv);
                if (!r.real_rooted || *r.roots_in_interval != r.degree) status = "fail";
                e["roots_in_interval"] = *r.roots_in_interval;
                e["degree"] = r.degree;
            } else if (c == "log-concave") {
                std::vector<Rational> seq(t.row(n).begin(), t.row(n).end());
                const auto lc = log_concave(seq);
                if (!lc.ok) {
                    status = "fail";
                    e["witness_k"] = *lc.witness;
                }
            } else if (c == "interlace") {
                if (n == 0) {
                    status = "n/a";
                } else if (!sturm_analyze(polys[n - 1]).real_rooted || !sturm_analyze(pn).real_rooted) {
                    status = "fail";
                    e["detail"] = "rows are not both real-rooted";
                } else if (!interlacing(polys[n - 1], pn)) {
                    status = "fail";
                }
            } else if (c == "gamma" || c == "symmetry") {
                const auto s = structure_summary(pn);
                if (c == "symmetry") {
                    if (!s.symmetric) status = "fail";
                    e["unimodal"] = s.unimodal;
                    if (s.symmetric) e["center"] = s.center.to_string();
                } else if (!s.gamma_nonneg) {
                    status = "n/a";
                    e["detail"] = "row is not symmetric";
                } else {
                    if (!*s.gamma_nonneg) status = "fail";
                    e["gamma"] = rationals_json(s.gamma);
                }
            }
            if (status == "fail") ok = false;
            e["status"] = status;
            rows.push_back(std::move(e));
        }
        results[c] = std::move(rows);
    }
    nlohmann::json j{{"preset", p.id}, {"n_max", o.n_max}, {"checks", std::move(results)}, {"passed", ok}};
    if (!interval_note.empty()) j["root_interval"] = interval_note;
    out << j.dump(2) << '\n';
    return ok ? 0 : 1;
}

int cmd_oracle(const Options& o, std::ostream& out) {
    const Preset& p = find_preset(o.preset);
    const auto cmp = run_oracle(p, o.n_max);
    if (o.format == "csv") {
        for (std::size_t k = 0; k < cmp.histogram.size(); ++k) out << (k ? "," : "") << cmp.histogram[k];
        out << '\n';
    } else {
        nlohmann::json j{{"preset", p.id},
                         {"n", o.n_max},
                         {"oracle", p.oracle->description},
                         {"histogram", rationals_json(cmp.histogram)},
                         {"row", rationals_json(cmp.row)},
                         {"row_index", p.oracle->row_of(o.n_max)},
                         {"diff", cmp.diff}};
        out << j.dump() << '\n';
    }
    return cmp.diff.empty() ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Generalized Eulerian triangles, exact identity checks and analyses", "eulertri"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* sub, bool with_format = true) {
        if (with_format) {
            sub->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
        }
        sub->add_option("--seed", o.seed, "seed for randomized parameter draws");
        sub->add_option("--out", o.out_path, "write the output to this file");
    };

    auto* gen = app.add_subcommand("gen", "print rows 0..n of a preset triangle");
    gen->add_option("preset,--preset", o.preset, "preset id")->required();
    gen->add_option("n_max,--n-max", o.n_max, "last row")->default_val(10);
    gen->add_option("format,--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    add_common(gen, false);

    auto* verify = app.add_subcommand("verify", "check identities exactly");
    verify->add_option("target,--checks", o.target, "target id, or several separated by commas")->required();
    verify->add_option("scope,--preset", o.preset, "preset id or 'random'")->required();
    verify->add_option("n_max,--n-max", o.n_max, "largest n (series order for EGF targets)")->default_val(12);
    add_common(verify);

    auto* analyze = app.add_subcommand("analyze", "structural checks of the row polynomials");
    analyze->add_option("preset,--preset", o.preset, "preset id")->required();
    analyze->add_option("n_max,--n-max", o.n_max, "last row")->default_val(12);
    analyze->add_option("checks,--checks", o.checks,
                        "comma list of real-rooted, root-interval, log-concave, interlace, qlogconvex, gamma, symmetry");
    add_common(analyze);

    auto* oracle = app.add_subcommand("oracle", "compare a brute-force histogram with the preset row");
    oracle->add_option("preset,--preset", o.preset, "preset id")->required();
    oracle->add_option("n,--n-max", o.n_max, "enumeration size")->required();
    add_common(oracle);

    std::vector<std::string> reversed_args(args.rbegin(), args.rend());
    try {
        app.parse(reversed_args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    std::ostringstream buffer;
    int status = 0;
    try {
        if (*gen) status = cmd_gen(o, buffer);
        else if (*verify) status = cmd_verify(o, buffer);
        else if (*analyze) status = cmd_analyze(o, buffer);
        else if (*oracle) status = cmd_oracle(o, buffer);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    if (!o.out_path.empty()) {
        std::ofstream f(o.out_path);
        if (!f) {
            err << "error: cannot write " << o.out_path << '\n';
            return 2;
        }
        f << buffer.str();
    } else {
        out << buffer.str();
    }
    return status;
}

}  // namespace eulertri
