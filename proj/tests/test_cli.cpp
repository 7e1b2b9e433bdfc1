#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "json.hpp"
#include "permstat/bijections.hpp"
#include "permstat/enumeration.hpp"
#include "permstat/genfun.hpp"
#include "permstat/json_io.hpp"

using namespace permstat;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout and stderr combined
};

std::string binary_path() {
    const char* env = std::getenv("PERMSTAT_BIN");
    REQUIRE_MESSAGE(env != nullptr, "PERMSTAT_BIN must point at the CLI binary");
    return env;
}

RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    std::string cmd = env_prefix + binary_path() + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf;
    while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) r.output.append(buf.data(), got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("stats prints the full statistic line") {
    RunResult r = run_cli("stats 4,7,3,6,2,1,5");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "crossings=3"));
    CHECK(contains(r.output, "nestings=4"));
    CHECK(contains(r.output, "alignments=6"));
    CHECK(contains(r.output, "wex=4"));
    CHECK(contains(r.output, "31-2=3"));
}

TEST_CASE("stats understands decorated permutations") {
    RunResult r = run_cli("stats 1+,3,2,4-");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "wex="));
    CHECK(contains(r.output, "nonexc="));
}

TEST_CASE("bijection fz emits the path and the weight monomials") {
    RunResult r = run_cli("bijection --map fz 4,1,5,6,2,3");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "NeNESS"));
    auto newline = r.output.find('\n');
    REQUIRE(newline != std::string::npos);
    std::string weights_line = r.output.substr(newline + 1);
    WeightedPath expect = fz_map(Permutation::parse("4,1,5,6,2,3"));
    CHECK(nlohmann::json::parse(weights_line) ==
          nlohmann::json::parse(to_json(expect.weights).dump()));
}

TEST_CASE("bijection direct and reverse print permutations") {
    RunResult d = run_cli("bijection --map direct 5,1,7,4,3,6,8,2");
    CHECK(d.exit_code == 0);
    CHECK(contains(d.output, "8,5,6,2,1,7,3,4"));
    RunResult v = run_cli("bijection --map reverse 1,2,3");
    CHECK(v.exit_code == 0);
    CHECK(contains(v.output, "3,2,1"));
}

TEST_CASE("series output is deterministic and matches the library") {
    RunResult a = run_cli("series --which F --order 3");
    RunResult b = run_cli("series --which F --order 3");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK(a.output == to_json(F_series(3)).dump() + "\n");
    RunResult e = run_cli("series --which Apq --order 2");
    CHECK(e.exit_code == 0);
}

TEST_CASE("table B emits the table JSON") {
    RunResult r = run_cli("table --which B --n 2");
    CHECK(r.exit_code == 0);
    CHECK(r.output == enumerate_B_table(2).to_json().dump() + "\n");
}

TEST_CASE("table Ehat emits TSV rows of polynomials") {
    RunResult r = run_cli("table --which Ehat --n 3");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "3\t2\t"));
    CHECK(contains(r.output, to_json(e_hat(2, 3).poly).dump()));
}

TEST_CASE("table n beyond the cap is refused; PERMSTAT_MAX_N raises it") {
    RunResult r = run_cli("table --which B --n 10");
    CHECK(r.exit_code == 2);
    CHECK(contains(r.output, "limit"));
    RunResult ok = run_cli("table --which D --n 4");
    CHECK(ok.exit_code == 0);
    RunResult env = run_cli("table --which B --n 10 --threads 2", "PERMSTAT_MAX_N=10 ");
    CHECK(env.exit_code == 0);
    CHECK(contains(env.output, "\"n\":10"));
}

TEST_CASE("pasep stationary prints exact probabilities") {
    RunResult r = run_cli("pasep stationary --n 2 --alpha 1 --beta 1 --q 0");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "#.\t2/5"));
    CHECK(contains(r.output, "..\t1/5"));
    CHECK(contains(r.output, ".#\t1/5"));
    CHECK(contains(r.output, "##\t1/5"));
}

TEST_CASE("pasep verify runs the grid") {
    RunResult r = run_cli("pasep verify --n 2");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "PASS pasep.stationary==W/Z n=1"));
    CHECK(contains(r.output, "PASS pasep.stationary==W/Z n=2"));
    CHECK(!contains(r.output, "FAIL"));
}

TEST_CASE("verify suite exits zero on success") {
    RunResult r = run_cli("verify --suite theorem1 --max-n 5");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "PASS theorem1.B==D n<=5"));
    CHECK(!contains(r.output, "FAIL"));
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("stats 1,1").exit_code == 2);
    CHECK(run_cli("stats").exit_code == 2);
    CHECK(run_cli("stats 1,2 --bogus").exit_code == 2);  // unknown flags rejected
    CHECK(run_cli("bijection --map nope 1,2").exit_code == 2);
    CHECK(run_cli("series --which F --order 99").exit_code == 2);
    CHECK(run_cli("pasep stationary --n 2 --alpha 0").exit_code == 2);
    CHECK(run_cli("pasep stationary --n 2 --alpha x").exit_code == 2);
    CHECK(run_cli("pasep stationary --n 2 --q 1/0").exit_code == 2);
    CHECK(run_cli("verify --suite bogus").exit_code == 2);
}

TEST_CASE("help exits zero") {
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("stats --help").exit_code == 0);
}
