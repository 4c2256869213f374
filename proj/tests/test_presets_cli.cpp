#include "eulertri/cli.hpp"
#include "eulertri/presets.hpp"

#include "support.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

using namespace eulertri;
using namespace eulertri::testing;

namespace {

struct CliRun {
    int status;
    std::string out;
    std::string err;
};

CliRun cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int status = run_cli(args, out, err);
    return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("catalog ids are unique and buildable") {
    std::set<std::string> ids;
    for (const auto& p : preset_catalog()) {
        CHECK(ids.insert(p.id).second);
        const auto t = build_preset(p, 6);
        CHECK(t.depth() == 6);
        CHECK_FALSE(p.shift.relation.empty());
    }
    CHECK(ids.size() == 14);
    CHECK_THROWS_AS(find_preset("nosuch"), UsageError);
}

TEST_CASE("every preset oracle matches over its full range") {
    for (const auto& p : preset_catalog()) {
        if (!p.oracle) continue;
        for (std::size_t n = p.oracle->n_min; n <= std::min<std::size_t>(p.oracle->n_max, 6); ++n) {
            INFO(p.id << " n=" << n);
            CHECK(run_oracle(p, n).diff.empty());
        }
    }
    CHECK_THROWS_AS(run_oracle(find_preset("springer"), 3), UsageError);
    CHECK_THROWS_AS(run_oracle(find_preset("eulerian-shifted"), 20), UsageError);
}

TEST_CASE("every theorem binding passes on its preset") {
    for (const auto& p : preset_catalog()) {
        for (const auto& b : p.theorem_bindings) {
            INFO(p.id << " " << b.target);
            CHECK(run_verification(b.target, p.id, 8, 0).passed());
        }
    }
    CHECK_THROWS_AS(run_verification("thm34", "eulerian-shifted", 8, 0), UsageError);
    CHECK_THROWS_AS(run_verification("nosuch", "random", 8, 0), UsageError);
}

TEST_CASE("json round trip") {
    const auto t = build_preset(find_preset("lambert-beta"), 8);
    const auto j = triangle_to_json("lambert-beta", t);
    CHECK(triangle_from_json(nlohmann::json::parse(j.dump())) == t);
    CHECK(rational_from_json(rational_to_json(Rational(-7, 3))) == Rational(-7, 3));
    CHECK(rational_to_json(factorial(30)).is_string());
    CHECK(rational_from_json(rational_to_json(factorial(30))) == factorial(30));
}

TEST_CASE("gen json and csv round trip through the command line") {
    const auto js = cli({"gen", "runs-typeB-Z-shifted", "6"});
    REQUIRE(js.status == 0);
    const auto j = nlohmann::json::parse(js.out);
    CHECK(j["preset"] == "runs-typeB-Z-shifted");
    CHECK(j["n_max"] == 6);
    CHECK(j["shift"]["row_offset"] == 1);
    const auto t = triangle_from_json(j);
    CHECK(row_of(t, 3) == ints({1, 39, 95, 57}));

    const auto csv = cli({"gen", "--preset", "runs-typeB-Z-shifted", "--n-max", "6", "--format", "csv"});
    REQUIRE(csv.status == 0);
    CHECK(triangle_from_csv(csv.out) == t);
    CHECK(cli({"gen", "runs-typeB-Z-shifted", "6", "csv"}).out == csv.out);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(cli({"gen", "nosuch", "5"}).status == 2);
    CHECK(cli({"oracle", "springer", "3"}).status == 2);
    CHECK(cli({"verify", "thm99", "random", "5"}).status == 2);
    CHECK(cli({"analyze", "staircase", "5", "--checks", "bogus"}).status == 2);
    CHECK(cli({"gen", "staircase", "5", "--format", "xml"}).status == 2);
    CHECK(cli({}).status == 2);
}

TEST_CASE("verify reports") {
    const auto r = cli({"verify", "thm21", "random", "8", "--seed", "3"});
    CHECK(r.status == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["passed"] == true);
    CHECK(j["scope"] == "random");

    const auto many = cli({"verify", "thm31,thm32", "flower", "8"});
    CHECK(many.status == 0);
    CHECK(nlohmann::json::parse(many.out).size() == 2);

    const auto seeded_a = cli({"verify", "thm33", "random", "6", "--seed", "11"});
    const auto seeded_b = cli({"verify", "thm33", "random", "6", "--seed", "11"});
    CHECK(seeded_a.out == seeded_b.out);
}

TEST_CASE("verify exits 1 on a failing identity") {
    const auto r = cli({"verify", "thm36", "random", "6"});
    CHECK(r.status == 1);
    CHECK(nlohmann::json::parse(r.out)["passed"] == false);
}

TEST_CASE("analyze") {
    const auto r = cli({"analyze", "staircase", "10", "--checks", "real-rooted,root-interval,log-concave,interlace"});
    CHECK(r.status == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["root_interval"] == "[-lambda/d, 0]");
    CHECK(j["checks"]["real-rooted"].size() == 11);

    const auto g = cli({"analyze", "eulerian-typeB", "10", "--checks", "gamma,symmetry"});
    CHECK(g.status == 0);
    const auto sym = cli({"analyze", "runs-typeB-Z-shifted", "6", "--checks", "symmetry"});
    CHECK(sym.status == 1);
    CHECK(cli({"analyze", "lambert-beta", "8", "--checks", "qlogconvex"}).status == 0);
}

TEST_CASE("oracle subcommand") {
    const auto r = cli({"oracle", "eulerian-typeB", "4"});
    CHECK(r.status == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["diff"].empty());
    CHECK(j["histogram"] == nlohmann::json::parse("[1,76,230,76,1]"));
}

TEST_CASE("--out writes a file") {
    const auto path = std::filesystem::temp_directory_path() / "eulertri_cli_out.csv";
    const auto r = cli({"gen", "flower", "4", "csv", "--out", path.string()});
    CHECK(r.status == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str() == triangle_to_csv(build_preset(find_preset("flower"), 4)));
    CHECK(buf.str().rfind("1\n1,1\n1,5,1\n", 0) == 0);
    std::filesystem::remove(path);
}
