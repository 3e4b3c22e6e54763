// Subprocess tests for the command-line tool. Each case runs the real
// binary (path injected at build time via LRCTOOL_PATH), captures
// stdout+stderr, and checks the text and the exit status.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <optional>
#include <string>

#include <json.hpp>

#include "lrc/json_io.hpp"
#include "lrc/linear_code.hpp"
#include "lrc/locality.hpp"
#include "lrc/matrix.hpp"

namespace {

struct RunResult {
    int status = -1;
    std::string out;  // stdout and stderr combined
};

RunResult run_tool(const std::string& args) {
    const std::string cmd = std::string(LRCTOOL_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult res;
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0)
        res.out.append(buf, got);
    const int rc = pclose(pipe);
    res.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return res;
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

std::string tmp_path(const std::string& name) {
    return "/tmp/lrc_cli_" + name;
}

// [6,4] code over GF(7) with two disjoint (2,2)-repair sets.
lrc::LinearCode two_block_code() {
    lrc::Field f(7, 1);
    lrc::Matrix h(f, 2, 6);
    for (std::size_t j = 0; j < 3; ++j) h.at(0, j) = f.one();
    for (std::size_t j = 3; j < 6; ++j) h.at(1, j) = f.one();
    return lrc::from_parity(h);
}

// [4,3] code over GF(5) without any (2,2)-repair sets.
lrc::LinearCode no_locality_code() {
    lrc::Field f(5, 1);
    lrc::Matrix g(f, 3, 4);
    for (std::size_t i = 0; i < 3; ++i) {
        g.at(i, i) = f.one();
        g.at(i, 3) = f.from_int(i + 1);
    }
    return lrc::make_code(g, lrc::kernel(g));
}

// [4,1] repetition code over GF(2): every coordinate set is a repair set.
lrc::LinearCode repetition4() {
    lrc::Field f(2, 1);
    lrc::Matrix g(f, 1, 4);
    for (std::size_t j = 0; j < 4; ++j) g.at(0, j) = f.one();
    return lrc::make_code(g, lrc::kernel(g));
}

const std::string kPlanA =
    "--variant A --r 4 --delta 2 --m 2 --u 6 --v 3 --w 7 --q 37 --e 3";
const std::string kPlanB =
    "--variant B --r 3 --delta 2 --m 1 --u 7 --v 2 --w 8 --q 37 --e 3";

}  // namespace

TEST_CASE("phi subcommand prints the slack value") {
    auto res = run_tool("phi --r 4 --delta 2 --a 37 --b 6");
    CHECK(res.status == 0);
    CHECK(res.out == "3\n");

    res = run_tool("phi --r 4 --delta 2 --a 40 --b 5");
    CHECK(res.status == 0);
    CHECK(res.out == "0\n");

    res = run_tool("phi --r 4 --delta 2 --a 37 --b 6 --json");
    CHECK(res.status == 0);
    auto j = nlohmann::json::parse(res.out);
    CHECK(j.at("phi") == 3);
}

TEST_CASE("bound subcommand evaluates each closed form") {
    auto res = run_tool("bound --kind eq2 --n 37 --k 27 --r 4 --delta 2");
    CHECK(res.status == 0);
    CHECK(res.out == "5\n");

    res = run_tool("bound --kind improved --n 37 --k 27 --r 4 --delta 2 --M 0");
    CHECK(res.status == 0);
    CHECK(res.out == "4\n");

    res = run_tool("bound --kind cor5 --n 37 --k 27 --r 4 --delta 2");
    CHECK(res.status == 0);
    CHECK(res.out == "4\n");

    res = run_tool("bound --kind cor7 --n 37 --k 27 --r 4 --delta 2");
    CHECK(res.status == 0);
    CHECK(res.out == "4\n");

    res = run_tool("bound --kind cor8 --n 33 --k 23 --r 3 --delta 2");
    CHECK(res.status == 0);
    CHECK(res.out == "3\n");

    res = run_tool("bound --kind dmax --n 37 --k 27 --r 4 --delta 2 --json");
    CHECK(res.status == 0);
    auto j = nlohmann::json::parse(res.out);
    CHECK(j.at("kind") == "dmax");
    CHECK(j.at("value") == 4);
}

TEST_CASE("bound subcommand flags usage errors") {
    // improved needs M.
    auto res = run_tool("bound --kind improved --n 37 --k 27 --r 4 --delta 2");
    CHECK(res.status == 2);
    CHECK(contains(res.out, "requires --M"));

    // dmax undefined when the block size divides n (m = 0).
    res = run_tool("bound --kind dmax --n 12 --k 4 --r 2 --delta 2");
    CHECK(res.status == 2);
    CHECK(contains(res.out, "dmax preconditions"));

    res = run_tool("bound --kind frobnicate --n 12 --k 4 --r 2 --delta 2");
    CHECK(res.status == 2);
    CHECK(contains(res.out, "unknown bound kind"));

    // Parameters with no decomposition.
    res = run_tool("bound --kind eq2 --n 4 --k 2 --r 2 --delta 4");
    CHECK(res.status == 2);
    CHECK(contains(res.out, "infeasible parameters"));
}

TEST_CASE("classify subcommand reports the regime in text and JSON") {
    auto res = run_tool("classify --n 37 --k 27 --r 4 --delta 2");
    CHECK(res.status == 0);
    CHECK(contains(res.out, "regime: corollary7-tight"));
    CHECK(contains(res.out, "n=37 k=27 r=4 delta=2"));
    CHECK(contains(res.out, "eq2"));

    res = run_tool("classify --n 37 --k 27 --r 4 --delta 2 --M 0 --json");
    CHECK(res.status == 0);
    auto j = nlohmann::json::parse(res.out);
    CHECK(j.at("regime").at("leaf") == "corollary7-tight");
    CHECK(j.at("eq2") == 5);
    CHECK(j.at("dmax") == 4);
    CHECK(j.at("improved") == 4);
    CHECK(j.at("cor7").at("applicable") == true);
    CHECK(j.at("cor7").at("value") == 4);
    CHECK(j.at("params").at("m") == 2);

    res = run_tool("classify --n 4 --k 2 --r 2 --delta 4");
    CHECK(res.status == 2);
    CHECK(contains(res.out, "infeasible parameters"));
}

TEST_CASE("construct then verify round-trips an optimal code") {
    const std::string file = tmp_path("variantA.json");
    auto res = run_tool("construct " + kPlanA + " --out " + file);
    CHECK(res.status == 0);
    CHECK(contains(res.out, "n=37 k=27 predicted_d=4 written to " + file));

    res = run_tool("verify --code " + file);
    CHECK(res.status == 0);
    CHECK(contains(res.out, "dimension: PASS"));
    CHECK(contains(res.out, "coverage: PASS"));
    CHECK(contains(res.out, "locality: PASS"));
    CHECK(contains(res.out, "distance: PASS"));
    CHECK(contains(res.out, "bound-match: PASS"));
    CHECK(contains(res.out, "all checks passed"));

    res = run_tool("verify --code " + file + " --expect-d 4");
    CHECK(res.status == 0);
    CHECK(contains(res.out, "expected-distance: PASS"));

    res = run_tool("verify --code " + file + " --expect-d 5");
    CHECK(res.status == 1);
    CHECK(contains(res.out, "expected-distance: FAIL"));
    CHECK(contains(res.out, "verification failed"));

    // Mismatched r/delta against the stored plan is a usage error.
    res = run_tool("verify --code " + file + " --r 3 --delta 2");
    CHECK(res.status == 2);
    CHECK(contains(res.out, "do not match the plan"));

    res = run_tool("distance --code " + file + " --method columns --cap 5");
    CHECK(res.status == 0);
    CHECK(res.out == "4\n");

    res = run_tool("distance --code " + file + " --method columns --cap 3");
    CHECK(res.status == 0);
    CHECK(res.out == "greater than 3\n");

    res = run_tool("distance --code " + file + " --method columns --cap 5 --json");
    CHECK(res.status == 0);
    auto j = nlohmann::json::parse(res.out);
    CHECK(j.at("value") == 4);
    CHECK(j.at("exact") == true);
}

TEST_CASE("construct variant B verifies against its tight bound") {
    const std::string file = tmp_path("variantB.json");
    auto res = run_tool("construct " + kPlanB + " --out " + file + " --json");
    CHECK(res.status == 0);
    auto j = nlohmann::json::parse(res.out);
    CHECK(j.at("n") == 33);
    CHECK(j.at("k") == 23);
    CHECK(j.at("predicted_d") == 3);

    res = run_tool("verify --code " + file + " --json");
    CHECK(res.status == 0);
    auto v = nlohmann::json::parse(res.out);
    CHECK(v.at("ok") == true);
    CHECK(v.at("checks").size() == 5);
}

TEST_CASE("construct rejects invalid plans") {
    auto res = run_tool(
        "construct --variant A --r 4 --delta 2 --m 1 --u 6 --v 3 --w 7 "
        "--q 37 --e 3 --out " +
        tmp_path("never.json"));
    CHECK(res.status == 2);
    CHECK(contains(res.out, "m >= delta violated"));

    res = run_tool(
        "construct --variant C --r 4 --delta 2 --m 2 --u 6 --v 3 --w 7 "
        "--q 37 --e 3 --out " +
        tmp_path("never.json"));
    CHECK(res.status == 2);
    CHECK(contains(res.out, "--variant must be A or B"));
}

TEST_CASE("verify mismatched plan metadata fails cleanly") {
    const std::string file_a = tmp_path("splice_a.json");
    const std::string file_b = tmp_path("splice_b.json");
    REQUIRE(run_tool("construct " + kPlanA + " --out " + file_a).status == 0);
    REQUIRE(run_tool("construct " + kPlanB + " --out " + file_b).status == 0);

    // Graft variant A's plan metadata onto variant B's code.
    nlohmann::json ja, jb;
    {
        std::ifstream ia(file_a), ib(file_b);
        REQUIRE(ia.good());
        REQUIRE(ib.good());
        ia >> ja;
        ib >> jb;
    }
    jb["plan"] = ja["plan"];
    const std::string spliced = tmp_path("spliced.json");
    {
        std::ofstream out(spliced);
        out << jb.dump();
    }

    auto res = run_tool("verify --code " + spliced);
    CHECK(res.status == 1);
    CHECK(contains(res.out, "dimension: FAIL"));
    CHECK(contains(res.out, "verification failed"));
}

TEST_CASE("verify without plan metadata runs the generic pipeline") {
    const std::string file = tmp_path("two_block.json");
    lrc::write_code_file(file, two_block_code(), std::nullopt);

    // The generic path needs --r/--delta.
    auto res = run_tool("verify --code " + file);
    CHECK(res.status == 2);
    CHECK(contains(res.out, "requires --r and --delta"));

    res = run_tool("verify --code " + file + " --r 2 --delta 2");
    CHECK(res.status == 0);
    CHECK(contains(res.out, "coverage: PASS"));
    CHECK(contains(res.out, "certified d <= 2"));
    CHECK(contains(res.out, "distance: PASS"));
    CHECK(contains(res.out, "all checks passed"));

    res = run_tool("verify --code " + file + " --r 2 --delta 2 --expect-d 2");
    CHECK(res.status == 0);

    res = run_tool("verify --code " + file + " --r 2 --delta 2 --expect-d 3");
    CHECK(res.status == 1);
    CHECK(contains(res.out, "expected-distance: FAIL"));
}

TEST_CASE("verify reports codes without locality") {
    const std::string file = tmp_path("no_locality.json");
    lrc::write_code_file(file, no_locality_code(), std::nullopt);

    auto res = run_tool("verify --code " + file + " --r 2 --delta 2");
    CHECK(res.status == 1);
    CHECK(contains(res.out, "coverage: FAIL"));
    CHECK(contains(res.out, "no repair set covers coordinate 1"));
}

TEST_CASE("ecf subcommand reports conditions, breakup, and extension") {
    const std::string fam_file = tmp_path("family.json");
    lrc::RepairFamily fam{4, {{0, 1, 2}, {0, 1, 2, 3}}};
    {
        std::ofstream out(fam_file);
        out << lrc::family_to_json(fam).dump();
    }

    auto res = run_tool("ecf --family " + fam_file + " --r 3 --delta 2");
    CHECK(res.status == 0);
    CHECK(contains(res.out, "S1 = {1,2,3}"));
    CHECK(contains(res.out, "S2 = {1,2,3,4}"));
    CHECK(contains(res.out, "covers all coordinates: yes"));
    // S1 is contained in S2, so the family is not essential.
    CHECK(contains(res.out, "essential covering family"));
    CHECK(contains(res.out, ": no"));
    CHECK(contains(res.out, "C3: yes"));
    CHECK(contains(res.out, "V1 = {S1,S2}"));
    CHECK(contains(res.out, "V1' = {S1}"));

    // With a code, the extension and M are reported too.
    const std::string code_file = tmp_path("rep4.json");
    lrc::write_code_file(code_file, repetition4(), std::nullopt);
    res = run_tool("ecf --family " + fam_file + " --r 3 --delta 2 --code " +
                   code_file + " --json");
    CHECK(res.status == 0);
    auto j = nlohmann::json::parse(res.out);
    CHECK(j.at("covers_all") == true);
    CHECK(j.at("is_ecf") == false);
    CHECK(j.at("C2") == false);
    CHECK(j.at("C3") == true);
    CHECK(j.at("overlap") == 3);
    CHECK(j.at("V1").size() == 2);
    CHECK(j.contains("V1_star"));
    CHECK(j.contains("M"));

    // Blocks that are not repair sets of the given code are rejected.
    const std::string bad_code = tmp_path("no_locality2.json");
    lrc::write_code_file(bad_code, no_locality_code(), std::nullopt);
    res = run_tool("ecf --family " + fam_file + " --r 3 --delta 2 --code " +
                   bad_code);
    CHECK(res.status == 2);
    CHECK(contains(res.out, "not an (r,delta)-repair set"));

    res = run_tool("ecf --family " + tmp_path("does_not_exist.json") +
                   " --r 3 --delta 2");
    CHECK(res.status == 2);
    CHECK(contains(res.out, "cannot open file"));
}

TEST_CASE("usage errors exit with status 2 and help exits 0") {
    auto res = run_tool("frobnicate");
    CHECK(res.status == 2);

    res = run_tool("phi --r 4");
    CHECK(res.status == 2);

    res = run_tool("");
    CHECK(res.status == 2);

    res = run_tool("--help");
    CHECK(res.status == 0);
    CHECK(contains(res.out, "classify"));
    CHECK(contains(res.out, "construct"));

    res = run_tool("verify --code " + tmp_path("missing_code.json"));
    CHECK(res.status == 2);
    CHECK(contains(res.out, "error:"));
}
