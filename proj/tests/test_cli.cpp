// End-to-end checks of the command-line tool: flag handling, exit codes, and
// byte-identical JSON round trips.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

struct CliResult {
    int exit_code = -1;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    const std::string out_path = "cli_test_output.txt";
    std::string cmd = std::string("'") + SCVOL_CLI_PATH + "' " + args + " > " + out_path + " 2>&1";
    int status = std::system(cmd.c_str());
    CliResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(out_path);
    std::stringstream buf;
    buf << in.rdbuf();
    r.out = buf.str();
    std::remove(out_path.c_str());
    return r;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("ratio --method all prints every path and agrees") {
    CliResult r = run_cli("ratio --d 4 --s 1 --method all");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "trinomial"));
    CHECK(contains(r.out, "legendre"));
    CHECK(contains(r.out, "78"));
    CHECK(contains(r.out, "agreement: yes"));
}

TEST_CASE("volume prints the exact value with a decimal approximation") {
    CliResult r = run_cli("volume --d 2 --s 1");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "8/3"));
    CHECK(contains(r.out, "2.666667"));
}

TEST_CASE("precondition violations exit with status 2 and a diagnostic") {
    CliResult r = run_cli("ratio --d 3 --s 2 --method detmix");
    CHECK(r.exit_code == 2);
    CHECK(contains(r.out, "s <= n-1"));

    CHECK(run_cli("ratio --d 3 --s 1 --method evenalt").exit_code == 2);
    CHECK(run_cli("ratio --d 4 --s 1 --method nosuch").exit_code == 2);
    CHECK(run_cli("ratio --d 4 --s 2 --method legendre").exit_code == 2);
    CHECK(run_cli("table").exit_code == 2);           // missing --dmax
    CHECK(run_cli("volume --d 2").exit_code == 2);    // missing --s
    CHECK(run_cli("mc --d 0 --samples 10").exit_code == 2);
}

TEST_CASE("table row sums match the full volumes") {
    CliResult r = run_cli("table --dmax 5");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "224/45"));
    CHECK(!contains(r.out, "MISMATCH"));
}

TEST_CASE("verify suites pass and report per property") {
    CliResult r = run_cli("verify --suite signs");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "[PASS]"));
    CHECK(!contains(r.out, "[FAIL]"));
    CHECK(run_cli("verify --suite nosuch").exit_code == 2);
}

TEST_CASE("json output round-trips byte-identically") {
    for (const std::string& args :
         {std::string("volume --d 3 --s 1 --format json"),
          std::string("ratio --d 4 --s 1 --method all --format json"),
          std::string("table --dmax 3 --format json"),
          std::string("mc --d 2 --samples 8192 --seed 7 --format json")}) {
        CliResult r = run_cli(args);
        REQUIRE(r.exit_code == 0);
        auto parsed = nlohmann::ordered_json::parse(r.out);
        CHECK(parsed.dump(2) + "\n" == r.out);
    }
}

TEST_CASE("volume json carries the schema fields") {
    CliResult r = run_cli("volume --d 3 --s 1 --format json");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::ordered_json::parse(r.out);
    CHECK(j["d"] == 3);
    CHECK(j["s"] == 1);
    CHECK(j["value"] == "224/45");
    CHECK(j["approx"].get<double>() == doctest::Approx(4.977778).epsilon(1e-6));
}

TEST_CASE("mc json carries the schema fields and z-scores") {
    CliResult r = run_cli("mc --d 2 --samples 20000 --seed 11 --format json");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::ordered_json::parse(r.out);
    CHECK(j["d"] == 2);
    CHECK(j["samples"] == 20000);
    CHECK(j["seed"] == 11);
    CHECK(j["box_volume"] == "8/1");
    REQUIRE(j["per_s"].size() == 2);
    CHECK(j["per_s"][0]["exact"] == "4/3");
    CHECK(j["per_s"][1]["exact"] == "8/3");
    for (const auto& cell : j["per_s"]) {
        CHECK(cell.contains("hits"));
        CHECK(cell.contains("estimate"));
        CHECK(cell.contains("stderr"));
        CHECK(cell.contains("z"));
    }
    CHECK(j.contains("degenerate"));
}
