#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "collatz/serialize.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>

using namespace collatz;

namespace {

struct CmdResult {
    int code = -1;
    std::string out;
};

CmdResult run_cli(const std::string& args) {
    const std::string cmd = std::string(COLLATZ_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CmdResult res;
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, got);
    const int status = pclose(pipe);
    res.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

}  // namespace

TEST_CASE("traj renders a fixed-length orbit") {
    const auto r = run_cli("traj --map T --start 27 --steps 8");
    CHECK(r.code == 0);
    CHECK(r.out.find("map=T start=27 steps=8") != std::string::npos);
    CHECK(r.out.find("242") != std::string::npos);
}

TEST_CASE("traj emits parseable JSON") {
    const auto r = run_cli("traj --map T --start 27 --steps 8 --format json");
    REQUIRE(r.code == 0);
    const Trajectory tr = trajectory_from_json(r.out);
    CHECK(tr.map == Map::collatz());
    CHECK(tr.steps == 8);
    CHECK(tr.terms.back() == 242);
}

TEST_CASE("traj --until stops at cycles and reports them canonically") {
    const auto r = run_cli("traj --map F --n 3 --start 2 --until --budget 10000");
    CHECK(r.code == 0);
    CHECK(r.out.find("cycle: -3 2 0") != std::string::npos);
}

TEST_CASE("traj CSV starts with the header row") {
    const auto r = run_cli("traj --map T --start 27 --steps 3 --format csv");
    CHECK(r.code == 0);
    CHECK(r.out.find("index,value\n0,27\n1,41\n") == 0);
}

TEST_CASE("traj rejects the start 0 under T with a usage error") {
    CHECK(run_cli("traj --map T --start 0 --steps 3").code == 2);
}

TEST_CASE("verify passes and prints PASS for a true identity") {
    const auto r = run_cli("verify --identity thm2.1 --N 1..50 --n -5..5 --kmax 16");
    CHECK(r.code == 0);
    CHECK(r.out.find("result: PASS") != std::string::npos);
}

TEST_CASE("verify JSON reports the exact grid size") {
    const auto r = run_cli(
        "verify --identity thm2.1 --N 1..50 --n -5..5 --kmax 16 --format json");
    REQUIRE(r.code == 0);
    const VerificationReport report = report_from_json(r.out);
    CHECK(report.identity == "thm2.1");
    CHECK(report.checked == 50ull * 11 * 17);
    CHECK(report.failures.empty());
}

TEST_CASE("verify covers the pairwise identities via --pairs") {
    const auto r = run_cli(
        "verify --identity cor2.2 --N 1..30 --pairs 3:-2,0:-1 --kmax 12");
    CHECK(r.code == 0);
    CHECK(r.out.find("result: PASS") != std::string::npos);
}

TEST_CASE("verify requires --pairs for pairwise identities") {
    CHECK(run_cli("verify --identity cor2.2 --N 1..30 --kmax 12").code == 2);
}

TEST_CASE("verify rejects unknown identities") {
    CHECK(run_cli("verify --identity thm9.9 --N 1..10").code == 2);
}

TEST_CASE("verify thm2.3 exits 1 when the budget is too small") {
    const auto r = run_cli(
        "verify --identity thm2.3 --n 0 --max-offset 26 --budget 10");
    CHECK(r.code == 1);
    CHECK(r.out.find("result: FAIL") != std::string::npos);
}

TEST_CASE("reach exits 0 on a verified sweep") {
    const auto r = run_cli("reach --n 3 --max-offset 200 --budget 1000");
    CHECK(r.code == 0);
    CHECK(r.out.find("result: PASS") != std::string::npos);
    CHECK(r.out.find("checked: 201") != std::string::npos);
}

TEST_CASE("reach exits 1 on budget exhaustion") {
    CHECK(run_cli("reach --n 0 --max-offset 26 --budget 10").code == 1);
}

TEST_CASE("matrix prints the symbolic grid as CSV") {
    const auto r = run_cli("matrix --top 16 --cols 6 --format csv");
    CHECK(r.code == 0);
    CHECK(r.out.find("2n+16,2n+24,2n+36,2n+54,2n+81,2n+41\n") == 0);
}

TEST_CASE("matrix substitutes -1/2 into the classical grid") {
    const auto r = run_cli("matrix --top 16 --cols 6 --subst -1/2 --format csv");
    CHECK(r.code == 0);
    CHECK(r.out.find("15,23,35,53,80,40\n") == 0);
}

TEST_CASE("matrix builds the ascending concrete grid") {
    const auto r = run_cli(
        "matrix --mode concrete --n 0 --top 17 --cols 11 --ascending --format csv");
    CHECK(r.code == 0);
    CHECK(r.out.find("2,3,2,3,2,3,2,3,2,3,2\n") == 0);
    CHECK(r.out.find("16,24,36,54,81,41,21,11,6,9,5\n") != std::string::npos);
}

TEST_CASE("matrix verifies chromatic equivalence") {
    const auto r = run_cli("matrix --top 16 --cols 6 --check-chroma");
    CHECK(r.code == 0);
    CHECK(r.out.find("identity: chroma") != std::string::npos);
    CHECK(r.out.find("result: PASS") != std::string::npos);
}

TEST_CASE("matrix emits HTML with colored cells") {
    const auto r = run_cli("matrix --top 16 --cols 6 --format html");
    CHECK(r.code == 0);
    CHECK(r.out.find("<!DOCTYPE html>") == 0);
    CHECK(r.out.find("chroma-") != std::string::npos);
}

TEST_CASE("matrix writes to a file with --out") {
    const std::string path = "/tmp/collatz_cli_matrix_test.csv";
    std::remove(path.c_str());
    const auto r = run_cli("matrix --top 16 --cols 6 --format csv --out " + path);
    CHECK(r.code == 0);
    std::ifstream in(path);
    REQUIRE(in.good());
    std::string first;
    std::getline(in, first);
    CHECK(first == "2n+16,2n+24,2n+36,2n+54,2n+81,2n+41");
    std::remove(path.c_str());
}

TEST_CASE("matrix reports unwritable output paths") {
    CHECK(run_cli("matrix --top 16 --cols 6 --out /nonexistent/dir/x.csv").code == 2);
}

TEST_CASE("coeffs renders exact rationals") {
    const auto r = run_cli("coeffs --map T --start 3 --kmax 2 --format csv");
    CHECK(r.code == 0);
    CHECK(r.out.find("k,count,lead,adjustment,term\n") == 0);
    CHECK(r.out.find("2,2,9/4,5/4,8") != std::string::npos);
}

TEST_CASE("coeffs supports family orbits") {
    const auto r = run_cli("coeffs --map F --n 3 --start 34 --kmax 8 --format csv");
    CHECK(r.code == 0);
    CHECK(r.out.find("8,") != std::string::npos);
    CHECK(r.out.find(",249") != std::string::npos);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli("").code == 2);
    CHECK(run_cli("bogus").code == 2);
    CHECK(run_cli("traj --map Q --start 1").code == 2);
    CHECK(run_cli("traj --steps 3").code == 2);          // missing --start
    CHECK(run_cli("matrix --top 1 --cols 6").code == 2);  // top offset too small
    CHECK(run_cli("verify --identity thm2.1 --N nonsense").code == 2);
}

TEST_CASE("help exits 0") {
    CHECK(run_cli("--help").code == 0);
    CHECK(run_cli("traj --help").code == 0);
}
