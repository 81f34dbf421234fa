#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <horocohom/io.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>

// Drives the installed command-line binary end to end. The harness passes
// the binary and fixture locations through the environment.

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

std::string binary_path() {
    const char* p = std::getenv("HOROCOHOM_BIN");
    REQUIRE_MESSAGE(p != nullptr, "HOROCOHOM_BIN is not set");
    return p;
}

std::string fixtures_dir() {
    const char* p = std::getenv("HOROCOHOM_FIXTURES");
    REQUIRE_MESSAGE(p != nullptr, "HOROCOHOM_FIXTURES is not set");
    return p;
}

RunResult run(const std::string& args, bool merge_stderr = false) {
    std::string cmd = binary_path() + " " + args;
    cmd += merge_stderr ? " 2>&1" : " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string write_temp(const std::string& name, const std::string& text) {
    std::string path = "/tmp/horocohom_cli_" + name;
    std::ofstream out(path);
    out << text;
    return path;
}

} // namespace

TEST_CASE("validate accepts the shipped fixtures") {
    for (const char* fixture : {"fan_p2.json", "fan_f2.json", "model_p1xp1.json"}) {
        auto r = run("validate " + fixtures_dir() + "/" + fixture);
        CHECK(r.exit_code == 0);
        CHECK(r.output == "ok\n");
    }
}

TEST_CASE("validate reports a determinant-2 cone and exits 1") {
    auto bad = write_temp(
        "bad_fan.json",
        R"({"dim": 2, "rays": [[1,0],[1,2],[-1,-1]], "max_cones": [[0,1],[1,2],[0,2]]})");
    auto r = run("validate " + bad);
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("smoothness violation") != std::string::npos);

    auto rj = run("validate --json " + bad);
    CHECK(rj.exit_code == 1);
    auto j = horo::io::parse_json_text(rj.output);
    CHECK(j.at("ok") == false);
    CHECK(j.at("violations").size() >= 1);
}

TEST_CASE("toric on the plane fixture") {
    auto r = run("toric " + fixtures_dir() + "/fan_p2.json --json");
    REQUIRE(r.exit_code == 0);
    auto j = horo::io::parse_json_text(r.output);
    CHECK(j.at("totals") == horo::io::json::array({3, 0, 0}));
    CHECK(j.at("entries").size() == 3);

    auto table = horo::io::table_from_json(j);
    CHECK(table.totals == std::vector<std::int64_t>{3, 0, 0});
}

TEST_CASE("toric agrees with its oracle on the ruled-surface fixture") {
    auto r = run("toric " + fixtures_dir() + "/fan_f2.json --oracle --json");
    REQUIRE(r.exit_code == 0);
    auto j = horo::io::parse_json_text(r.output);
    CHECK(j.at("totals") == horo::io::json::array({0, 3, 0}));
}

TEST_CASE("horo output re-parses to identical totals") {
    auto r = run("horo " + fixtures_dir() + "/model_p1xp1.json --json");
    REQUIRE(r.exit_code == 0);
    auto j = horo::io::parse_json_text(r.output);
    CHECK(j.at("flag_factor").at("degree") == 1);
    CHECK(j.at("flag_factor").at("dimension") == "2");
    CHECK(j.at("flag_factor").at("highest_weight") == horo::io::json::array({1}));
    REQUIRE(j.at("degrees").size() == 3);
    CHECK(j.at("degrees").at(2).at("total") == "2");

    // byte-stable reruns
    auto again = run("horo " + fixtures_dir() + "/model_p1xp1.json --json");
    CHECK(again.output == r.output);

    // the fiber block is itself a cohomology table; round-trip it
    auto fiber = horo::io::table_from_json(j.at("fiber"));
    CHECK(fiber.totals == std::vector<std::int64_t>{0, 1});

    auto text = run("horo " + fixtures_dir() + "/model_p1xp1.json");
    CHECK(text.exit_code == 0);
    CHECK(text.output.find("totals by degree: n=0: 0, n=1: 0, n=2: 2") !=
          std::string::npos);
}

TEST_CASE("horo verifies its fiber against the oracle") {
    auto r = run("horo " + fixtures_dir() + "/model_p1xp1.json --oracle");
    CHECK(r.exit_code == 0);
}

TEST_CASE("bwb on the model fixture") {
    auto r = run("bwb " + fixtures_dir() + "/model_p1xp1.json --json --cosets");
    REQUIRE(r.exit_code == 0);
    auto j = horo::io::parse_json_text(r.output);
    CHECK(j.at("degree") == 1);
    CHECK(j.at("dimension") == "2");
    CHECK(j.at("module_is_dual") == true);
    CHECK(j.at("coset_count") == 2);
    CHECK(j.at("cosets") == horo::io::json::array({horo::io::json::array(),
                                                   horo::io::json::array({1})}));
}

TEST_CASE("oracle totals on a fixture") {
    auto r = run("oracle " + fixtures_dir() + "/fan_p2.json --radius 4 --json");
    REQUIRE(r.exit_code == 0);
    auto j = horo::io::parse_json_text(r.output);
    CHECK(j.at("totals") == horo::io::json::array({3, 0, 0}));
}

TEST_CASE("crosscheck sweeps a coefficient range") {
    auto r = run("crosscheck " + fixtures_dir() + "/fan_p2.json --range 2 --json");
    REQUIRE(r.exit_code == 0);
    auto j = horo::io::parse_json_text(r.output);
    CHECK(j.at("agree") == true);
    CHECK(j.at("checked") == 125);

    auto single = run("crosscheck " + fixtures_dir() + "/fan_f2.json");
    CHECK(single.exit_code == 0);
    CHECK(single.output.find("checked 1 divisor(s)") != std::string::npos);
}

TEST_CASE("exit codes distinguish the failure classes") {
    // 3: not JSON at all
    auto garbage = write_temp("garbage.json", "this is not json");
    CHECK(run("toric " + garbage).exit_code == 3);

    // 3: missing file
    CHECK(run("toric /tmp/horocohom_cli_does_not_exist.json").exit_code == 3);

    // 3: schema violation (floating-point entry)
    auto fractional = write_temp(
        "fractional.json",
        R"({"dim": 1, "rays": [[1.5],[-1]], "max_cones": [[0],[1]], "divisor": [0,0]})");
    CHECK(run("toric " + fractional).exit_code == 3);

    // 3: fan file where a model file is expected
    CHECK(run("horo " + fixtures_dir() + "/fan_p2.json").exit_code == 3);

    // 3: missing divisor
    auto bare = write_temp(
        "bare.json",
        R"({"dim": 1, "rays": [[1],[-1]], "max_cones": [[0],[1]]})");
    CHECK(run("toric " + bare).exit_code == 3);

    // 1: structurally invalid fan reaches the solver
    auto incomplete = write_temp(
        "incomplete.json",
        R"({"dim": 1, "rays": [[1]], "max_cones": [[0]], "divisor": [0]})");
    CHECK(run("toric " + incomplete).exit_code == 1);

    // 4: cap exceeded
    CHECK(run("toric " + fixtures_dir() + "/fan_p2.json --max-rays 2").exit_code == 4);

    // 3: unknown subcommand or missing arguments
    CHECK(run("frobnicate").exit_code == 3);
    CHECK(run("toric").exit_code == 3);

    // 0: help
    CHECK(run("--help").exit_code == 0);
}

TEST_CASE("vanishing flag factor still reports a full table") {
    auto model = write_temp("vanishing_model.json", R"({
        "root_type": "A1",
        "levi_set": [],
        "fan": {"dim": 1, "rays": [[1], [-1]], "max_cones": [[0], [1]]},
        "divisor": {"colors": {"1": -1}, "boundary": [3, 0]}
    })");
    auto r = run("horo " + model + " --json");
    REQUIRE(r.exit_code == 0);
    auto j = horo::io::parse_json_text(r.output);
    CHECK(j.at("flag_factor").at("vanishing") == true);
    for (const auto& row : j.at("degrees")) CHECK(row.at("total") == "0");
}
