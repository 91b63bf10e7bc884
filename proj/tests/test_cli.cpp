// End-to-end checks of the installed CLI binary: spawns the real executable
// and inspects stdout and exit codes.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "doctest.h"
#include "carp/analysis.hpp"
#include "carp/io.hpp"
#include "carp/preprocess.hpp"

#ifndef CARP_CLI_PATH
#define CARP_CLI_PATH "carp"
#endif
#ifndef CARP_FIXTURE_DIR
#define CARP_FIXTURE_DIR "."
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(CARP_CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult result;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) result.out.append(buf.data(), got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string fixture(const char* name) { return std::string(CARP_FIXTURE_DIR) + "/" + name; }

}  // namespace

TEST_CASE("solve emits a machine report that re-parses and checks out") {
    const RunResult r =
        run("solve --input " + fixture("collinear2.dat") + " --output report");
    REQUIRE(r.exit_code == 0);
    const carp::RawInstance raw = carp::parse_instance(fixture("collinear2.dat"));
    auto [inst, lift] = carp::normalize(raw);
    const carp::Solution sol = carp::parse_solution_report(r.out, inst);
    CHECK(carp::check_solution(sol, inst).feasible());
    CHECK(r.out.find("lifted_total_cost") != std::string::npos);
}

TEST_CASE("solve text output carries both tour costs") {
    const RunResult r = run("solve --input " + fixture("triangle.dat"));
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("tour h1 cost") != std::string::npos);
    CHECK(r.out.find("tour h2 cost") != std::string::npos);
    CHECK(r.out.find("total cost: 12") != std::string::npos);
    CHECK(r.out.find("lifted cost: 12") != std::string::npos);
}

TEST_CASE("capacity-one solve equals twice delta") {
    const RunResult r =
        run("solve --input " + fixture("k1_line.dat") + " --output report");
    REQUIRE(r.exit_code == 0);
    const carp::RawInstance raw = carp::parse_instance(fixture("k1_line.dat"));
    auto [inst, lift] = carp::normalize(raw);
    const carp::Solution sol = carp::parse_solution_report(r.out, inst);
    CHECK(sol.total_cost == 2.0 * carp::delta_all(inst));
}

TEST_CASE("classic format goes through the alternate reader") {
    const RunResult r = run("solve --input " + fixture("classic_toy.dat") +
                            " --format classic --output report");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("m 3") != std::string::npos);
    CHECK(r.out.find("capacity 5") != std::string::npos);
}

TEST_CASE("exact subcommand solves small instances") {
    const RunResult r =
        run("exact --input " + fixture("collinear2.dat") + " --output report");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("mode exact") != std::string::npos);
}

TEST_CASE("ratio-table prints the closed-form values") {
    const RunResult r = run("ratio-table --k-range 3..8");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("k 3 l 1 ratio 1.888889 rounded 1.889") != std::string::npos);
    CHECK(r.out.find("k 4 l 1 ratio 2.000000 rounded 2.000") != std::string::npos);
    CHECK(r.out.find("k 5 l 2 ratio 2.085714 rounded 2.086") != std::string::npos);
    CHECK(r.out.find("k 6 l 2 ratio 2.142857 rounded 2.143") != std::string::npos);
    CHECK(r.out.find("k 7 l 2 ratio 2.183673 rounded 2.184") != std::string::npos);
    CHECK(r.out.find("k 8 l 2 ratio 2.214286 rounded 2.214") != std::string::npos);
}

TEST_CASE("bounds subcommand reports clean checks") {
    const RunResult r = run("bounds --input " + fixture("collinear2.dat"));
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("violations 0") != std::string::npos);
    CHECK(r.out.find("check partition_bound") != std::string::npos);
}

TEST_CASE("verify subcommand runs a sweep") {
    const RunResult r = run("verify --trials 25 --max-m 5 --seed 12");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("trials 25") != std::string::npos);
    CHECK(r.out.find("violations 0") != std::string::npos);
}

TEST_CASE("generate writes a loadable instance") {
    const std::string path = "/tmp/carp_cli_gen_test.dat";
    const RunResult r =
        run("generate --m 6 --capacity 3 --seed 5 --mode random-metric --out " + path);
    REQUIRE(r.exit_code == 0);
    const carp::RawInstance raw = carp::parse_instance(path);
    CHECK(raw.customer_edge_indices().size() == 6);
    std::remove(path.c_str());
}

TEST_CASE("exit codes") {
    SUBCASE("parse error is 2") {
        CHECK(run("solve --input " + fixture("bad_demand.dat")).exit_code == 2);
    }
    SUBCASE("missing file is 2") {
        CHECK(run("solve --input /no/such/file").exit_code == 2);
    }
    SUBCASE("unreachable customer is 3") {
        CHECK(run("solve --input " + fixture("unreachable.dat")).exit_code == 3);
    }
    SUBCASE("size cap is 4") {
        const std::string path = "/tmp/carp_cli_big_test.dat";
        REQUIRE(run("generate --m 9 --capacity 3 --seed 8 --out " + path).exit_code == 0);
        CHECK(run("exact --input " + path).exit_code == 4);
        std::remove(path.c_str());
    }
    SUBCASE("bad flags are 2") {
        CHECK(run("solve --nonsense").exit_code == 2);
        CHECK(run("ratio-table --k-range bogus").exit_code == 2);
    }
}
