#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

// Drives the installed executable end to end through popen. Every invocation
// sends stderr to /dev/null; tests that care about diagnostics assert on the
// exit code and stdout only.

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct RunResult {
    int exit_code = -1;
    std::string out;
};

std::string shell_quote(const std::string& arg) {
    std::string quoted = "'";
    for (char c : arg) {
        if (c == '\'')
            quoted += "'\\''";
        else
            quoted += c;
    }
    quoted += "'";
    return quoted;
}

RunResult run_cli(const std::vector<std::string>& args) {
    std::string cmd = shell_quote(PERMFACT_CLI_PATH);
    for (const auto& a : args) cmd += " " + shell_quote(a);
    cmd += " 2>/dev/null";
    RunResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return res;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, got);
    int status = pclose(pipe);
    if (WIFEXITED(status)) res.exit_code = WEXITSTATUS(status);
    return res;
}

json parse_out(const RunResult& res) { return json::parse(res.out); }

struct TempDir {
    fs::path path;
    explicit TempDir(const char* tag) {
        path = fs::temp_directory_path() / (std::string("permfact-cli-") + tag);
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

const char* torus_nu = "(1 8 5 15)(2 12 10 14 16 11)(3 18 17 7)(4 9 13)(6)";
const char* torus_eps = "(1 14)(2 17)(3 7)(4 10)(5 13)(6 8)(9 18)(11 15)(12 16)";
const char* torus_phi = "(1 6 8 13 10)(2 16 15 14 12 4 18)(3 9 5 11 17)(7)";

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("transitive count in json") {
    auto res = run_cli({"count-transitive", "--target", "[1,1,1]", "--factors", "[3]",
                        "--factors", "[3]", "--format", "json"});
    REQUIRE(res.exit_code == 0);
    auto j = parse_out(res);
    CHECK(j.at("value") == "2");
    CHECK(j.at("agreement") == true);
    CHECK(j.at("query").at("command") == "count-transitive");
}

TEST_CASE("factorization count agrees with its brute route") {
    auto res = run_cli({"count-fact", "--target", "[2,1]", "--factors", "[2,1]",
                        "--factors", "[2,1]", "--brute-check", "--format", "json"});
    REQUIRE(res.exit_code == 0);
    auto j = parse_out(res);
    CHECK(j.at("agreement") == true);
    bool saw_brute = false;
    for (const auto& r : j.at("routes"))
        if (r.at("name") == "brute-force") saw_brute = true;
    CHECK(saw_brute);
}

TEST_CASE("hurwitz reports three agreeing routes at genus zero") {
    auto res = run_cli({"hurwitz", "--alpha", "[2,1]", "--format", "json"});
    REQUIRE(res.exit_code == 0);
    auto j = parse_out(res);
    CHECK(j.at("value") == "4");
    CHECK(j.at("routes").size() == 3);
    CHECK(j.at("agreement") == true);
}

TEST_CASE("double hurwitz diagonal value") {
    auto res = run_cli({"double-hurwitz", "--alpha", "[4]", "--beta", "[4]", "--format", "json"});
    REQUIRE(res.exit_code == 0);
    CHECK(parse_out(res).at("value") == "1/4");
}

TEST_CASE("maps count of the one edge loop") {
    auto res = run_cli({"maps", "--vertices", "[2]", "--faces", "[1,1]", "--format", "json"});
    REQUIRE(res.exit_code == 0);
    auto j = parse_out(res);
    CHECK(j.at("value") == "1");
    CHECK(j.at("query").at("edges") == "[2]");
}

TEST_CASE("psi coefficient and character scalars") {
    auto psi = run_cli({"psi-coeff", "--lambda", "[1]", "--mu", "[1]", "--tau", "[1]",
                        "--format", "json"});
    REQUIRE(psi.exit_code == 0);
    CHECK(parse_out(psi).at("value") == "1");

    auto chi = run_cli({"character", "--lambda", "[2,1]", "--theta", "[2,1]", "--format", "json"});
    REQUIRE(chi.exit_code == 0);
    CHECK(parse_out(chi).at("value") == "0");
}

TEST_CASE("scan and identity checks exit zero on success") {
    CHECK(run_cli({"b-scan", "--max-weight", "3"}).exit_code == 0);
    CHECK(run_cli({"lagrange-check", "--max-degree", "4"}).exit_code == 0);
}

TEST_CASE("csv tables are deterministic across runs") {
    std::vector<std::string> args{"joincut-table", "--max-weight", "5", "--format", "csv"};
    auto first = run_cli(args);
    auto second = run_cli(args);
    REQUIRE(first.exit_code == 0);
    CHECK(first.out == second.out);
    CHECK(first.out.rfind("partition,genus,value\n", 0) == 0);
}

TEST_CASE("a cache warm rerun answers byte-identically") {
    TempDir dir("cache");
    std::vector<std::string> args{"hurwitz", "--alpha",     "[3,1]",
                                  "--format", "json",       "--cache-dir",
                                  dir.path.string()};
    auto cold = run_cli(args);
    REQUIRE(cold.exit_code == 0);
    CHECK(fs::exists(dir.path / "permfact-cache.json"));
    auto warm = run_cli(args);
    REQUIRE(warm.exit_code == 0);
    CHECK(cold.out == warm.out);
    // the cache directory itself never appears in the output
    CHECK(cold.out.find(dir.path.string()) == std::string::npos);
}

TEST_CASE("worker count never shows up in the answer") {
    std::vector<std::string> base{"count-fact", "--target",  "[3,1]",
                                  "--factors",  "[2,1,1]",   "--factors",
                                  "[2,1,1]",    "--brute-check", "--format", "json"};
    auto one = run_cli(base);
    auto two = base;
    two.push_back("--workers");
    two.push_back("2");
    auto res_two = run_cli(two);
    REQUIRE(one.exit_code == 0);
    REQUIRE(res_two.exit_code == 0);
    CHECK(one.out == res_two.out);
}

TEST_CASE("map validation grades all three ways") {
    auto valid = run_cli({"validate-map", "--vertices", torus_nu, "--edges", torus_eps,
                          "--faces", torus_phi, "--format", "json"});
    CHECK(valid.exit_code == 0);
    auto j = parse_out(valid);
    CHECK(j.at("value") == "valid, genus 1");

    // the same vertex word with 5 written twice is a usage error
    auto corrupt = run_cli({"validate-map", "--vertices",
                            "(1 8 5 15)(2 12 10 14 16 11)(3 18 17 7)(4 9 13)(5)(6)",
                            "--edges", torus_eps, "--faces", torus_phi});
    CHECK(corrupt.exit_code == 2);

    // a parseable triple whose product fails is a mathematical failure
    auto bad = run_cli({"validate-map", "--vertices", "(1 2 3)", "--edges", "(1 2)",
                        "--faces", "(1 3 2)", "--symbols", "3", "--hypermap",
                        "--format", "json"});
    CHECK(bad.exit_code == 1);
    CHECK(parse_out(bad).at("agreement") == false);
}

TEST_CASE("usage errors exit with code two") {
    CHECK(run_cli({}).exit_code == 2);
    CHECK(run_cli({"hurwitz"}).exit_code == 2);  // missing required --alpha
    CHECK(run_cli({"hurwitz", "--alpha", "[2]", "--no-such-flag"}).exit_code == 2);
    CHECK(run_cli({"no-such-command"}).exit_code == 2);
    CHECK(run_cli({"hurwitz", "--alpha", "[not a partition]"}).exit_code == 2);
    CHECK(run_cli({"--help"}).exit_code == 0);
}

TEST_CASE("a blown budget is a mathematical failure, not a crash") {
    auto res = run_cli({"count-fact", "--target", "[2,2,1]", "--factors", "[2,2,1]",
                        "--factors", "[2,2,1]", "--brute-check", "--budget", "5",
                        "--format", "json"});
    CHECK(res.exit_code == 1);
}

TEST_CASE("text format stays readable") {
    auto res = run_cli({"hurwitz", "--alpha", "[2,1]"});
    REQUIRE(res.exit_code == 0);
    CHECK(res.out.find("value: 4") != std::string::npos);
    CHECK(res.out.find("routes agree") != std::string::npos);
}

}  // TEST_SUITE
