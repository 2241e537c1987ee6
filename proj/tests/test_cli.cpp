#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

namespace
{

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string> &args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = adcert::cli::dispatch(args, out, err);
    return {code, out.str(), err.str()};
}

std::string fixture(const std::string &name)
{
    return std::string(ADCERT_FIXTURE_DIR) + "/" + name;
}

} // namespace

TEST_CASE("usage and argument errors exit 2")
{
    const auto none = run({});
    CHECK(none.code == 2);
    CHECK(none.err.find("verify-all") != std::string::npos);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"expand", "--bogus"}).code == 2);
    CHECK(run({"expand", "--dim", "zero"}).code == 2);
    CHECK(run({"check-estimates", "--which", "nothing"}).code == 2);
    CHECK(run({"yukawa", "--alpha", "1,x,0"}).code == 2);
    CHECK(run({"verify-all", "--config", "/nonexistent/config.json"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("verify-induction passes")
{
    const auto r = run({"verify-induction", "--dim", "1", "--max-order", "6"});
    CHECK(r.code == 0);
    CHECK(r.out.find("all checks passed") != std::string::npos);
    CHECK(run({"verify-induction", "--dim", "2", "--max-order", "3", "--stepwise", "--threads", "2"}).code == 0);
}

TEST_CASE("expand emits term records")
{
    const auto r = run({"expand", "--dim", "1", "--order", "2", "--json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    REQUIRE(j.at("terms").size() == 14);
    unsigned sum = 0;
    for (const auto &t : j.at("terms")) {
        CHECK(t.contains("alpha"));
        CHECK(t.contains("b"));
        sum += std::stoul(t.at("coeff").get<std::string>());
    }
    CHECK(sum == 20);
    CHECK(j.at("version").get<std::string>().rfind("adcert", 0) == 0);

    const auto csv = run({"expand", "--dim", "2", "--order", "1", "--csv"});
    CHECK(csv.code == 0);
    CHECK(std::count(csv.out.begin(), csv.out.end(), '\n') == 1 + 6);
}

TEST_CASE("count emits one CSV row per (d, k)")
{
    const auto r = run({"count", "--dim", "1,2", "--max-order", "4", "--csv"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("d,k,exact_count,composition_formula_count,partition_bound_product\n", 0) == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 1 + 10);
    CHECK(r.out.find("\n1,4,105,105,") != std::string::npos);
}

TEST_CASE("check-estimates surfaces failures")
{
    const auto bad = run({"check-estimates", "--which", "betaell", "--C", "1.01", "--max-order", "8", "--csv"});
    CHECK(bad.code == 1);
    CHECK(bad.out.find(",false\n") != std::string::npos);
    const auto good = run({"check-estimates", "--which", "betaell", "--max-order", "30"});
    CHECK(good.code == 0);
    CHECK(good.out.find("C = ") != std::string::npos);
}

TEST_CASE("free-commutator CSV and spec files")
{
    const auto r = run({"free-commutator", "--spec", "relativistic", "--xi", "0,0.5", "--max-n", "4", "--grid",
                        "-2:2:0.1", "--csv"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("n,sup_ratio,fitted_C\n", 0) == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 5);
    CHECK(run({"free-commutator", "--max-n", "3", "--grid", "-2:2:0.1", "--golden", "1e-6"}).code == 1);

    const auto spec = std::filesystem::temp_directory_path() / "adcert_test_spec.json";
    {
        std::ofstream f(spec);
        f << R"({"name": "quartic", "dim": 1, "omega1": ["add", ["pow", "x0", 4], 1],
                 "omega2": ["add", ["pow", "x0", 4], 1], "s1": 2, "s2": 2})";
    }
    CHECK(run({"free-commutator", "--spec-file", spec.string(), "--max-n", "3", "--grid", "-2:2:0.2"}).code == 0);
    std::filesystem::remove(spec);
}

TEST_CASE("yukawa JSON carries the headline numbers")
{
    const auto r = run({"yukawa", "--alpha", "1,0,0", "--samples", "50000", "--json"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("weak_norm").get<double>() > 0.0);
    CHECK(j.at("weak_norm").get<double>() <= j.at("bound").get<double>());
    CHECK(j.at("c").get<double>() == doctest::Approx(394.78417604357435));
    CHECK(j.at("pass") == true);
    CHECK(run({"yukawa", "--alpha", "1,0"}).code == 2);
}

TEST_CASE("interaction rejects a divergent exponent")
{
    const auto r = run({"interaction", "--gamma", "0,0,1", "--p", "0.5"});
    CHECK(r.code == 2);
    CHECK(r.err.find("diverge") != std::string::npos);
    CHECK(run({"interaction", "--gamma", "0,0,1", "--samples", "50000"}).code == 0);
}

TEST_CASE("l1-check reports the zeroth-order violation")
{
    const auto r = run({"l1-check", "--preset", "gaussian", "--max-n", "4", "--csv"});
    CHECK(r.code == 1);
    CHECK(r.out.rfind("n,norm,error,base\n", 0) == 0);
    CHECK(run({"l1-check", "--preset", "lorentzian"}).code == 2);
}

TEST_CASE("verify-all fixtures and file outputs")
{
    const auto out_path = std::filesystem::temp_directory_path() / "adcert_test_report.json";
    const auto trivial = run({"verify-all", "--config", fixture("trivial.json"), "--json", out_path.string()});
    CHECK(trivial.code == 0);
    CHECK(trivial.out.find("criterion 1") != std::string::npos);
    std::ifstream f(out_path);
    const auto j = nlohmann::json::parse(f);
    CHECK(j.at("pass") == true);
    CHECK(j.at("command") == "verify-all");
    CHECK(j.at("parameters").at("seed") == 42);
    std::filesystem::remove(out_path);

    const auto tiny = run({"verify-all", "--config", fixture("tiny_C.json")});
    CHECK(tiny.code == 1);
    CHECK(tiny.out.find("FAIL c4.estimates.scan") != std::string::npos);

    const auto seeded = run({"verify-all", "--config", fixture("trivial.json"), "--seed", "7", "--json"});
    CHECK(nlohmann::json::parse(seeded.out).at("parameters").at("seed") == 7);
}

TEST_CASE("identical invocations give identical JSON apart from wall time")
{
    const std::vector<std::string> args{"yukawa", "--alpha", "0,1,1", "--samples", "20000", "--json"};
    auto a = nlohmann::json::parse(run(args).out);
    auto b = nlohmann::json::parse(run(args).out);
    a.erase("wall_time_s");
    b.erase("wall_time_s");
    CHECK(a.dump() == b.dump());
}
