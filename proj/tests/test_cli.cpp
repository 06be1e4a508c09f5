// Exercises the installed command-line surface end to end: exit codes,
// file outputs, and the documented formats.

#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "trigrid/grid_json.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout + stderr
};

RunResult run_cli(const std::string& args) {
    static int counter = 0;
    const fs::path log = fs::path("cli_test_tmp") / ("out" + std::to_string(counter++) + ".log");
    const std::string command = std::string(TRIGRID_BIN) + " " + args + " > " + log.string() + " 2>&1";
    const int status = std::system(command.c_str());
    RunResult result;
#ifdef _WIN32
    result.exit_code = status;
#else
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
#endif
    std::ifstream in(log);
    std::stringstream buffer;
    buffer << in.rdbuf();
    result.output = buffer.str();
    return result;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

struct TmpDir {
    TmpDir() {
        fs::remove_all("cli_test_tmp");
        fs::create_directory("cli_test_tmp");
    }
};

TmpDir& tmpdir() {
    static TmpDir dir;
    return dir;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("reduce writes the reduced grid") {
    tmpdir();
    const auto r = run_cli("reduce --n 3 --steps 1 --out cli_test_tmp/t32.json");
    REQUIRE(r.exit_code == 0);
    const trigrid::Grid g = trigrid::deserialize(slurp("cli_test_tmp/t32.json"));
    CHECK(g.n() == 2);
    CHECK(g.edge({{1, 1}, trigrid::Edge::left}) == trigrid::Rational(2, 3));
    CHECK(g.edge({{2, 1}, trigrid::Edge::right}) == trigrid::Rational(1));
    REQUIRE(g.provenance().has_value());
    CHECK(g.provenance()->original_n == 3);
    CHECK(g.provenance()->reductions == 1);
}

TEST_CASE("reduce with zero steps emits the grid verbatim") {
    tmpdir();
    const auto r = run_cli("reduce --n 5 --steps 0 --out cli_test_tmp/t5.json");
    REQUIRE(r.exit_code == 0);
    CHECK(trigrid::deserialize(slurp("cli_test_tmp/t5.json")) ==
          trigrid::make_uniform_grid(5, trigrid::Rational(1)));
}

TEST_CASE("reduce honors a fractional label") {
    tmpdir();
    const auto r = run_cli("reduce --n 2 --steps 0 --label 5/7 --out cli_test_tmp/t2.json");
    REQUIRE(r.exit_code == 0);
    CHECK(trigrid::deserialize(slurp("cli_test_tmp/t2.json")) ==
          trigrid::make_uniform_grid(2, trigrid::Rational(5, 7)));
}

TEST_CASE("reduce emits intermediates and a tails sidecar") {
    tmpdir();
    const auto r = run_cli("reduce --n 12 --steps 3 --emit-intermediates --out cli_test_tmp/g.json");
    REQUIRE(r.exit_code == 0);
    int grid_files = 0;
    for (const auto& entry : fs::directory_iterator("cli_test_tmp")) {
        const std::string name = entry.path().filename().string();
        if (name.find("g.") == 0 && name.find("tails") == std::string::npos &&
            name.find(".json") != std::string::npos)
            ++grid_files;
    }
    CHECK(grid_files == 4);  // three intermediates plus the final grid
    const auto tails = nlohmann::json::parse(slurp("cli_test_tmp/g.tails.json"));
    REQUIRE(tails.contains("tails"));
    CHECK(tails["tails"].size() == 3);
    CHECK(tails["tails"][0]["top"] == "1/3");
}

TEST_CASE("usage errors exit with 2") {
    tmpdir();
    CHECK(run_cli("reduce --steps 1").exit_code == 2);          // missing --n
    CHECK(run_cli("reduce --n 3 --steps 9").exit_code == 2);    // steps out of range
    CHECK(run_cli("reduce --n 3 --steps 1 --label 0/1").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("verify").exit_code == 2);
    CHECK(run_cli("verify gcd --format yaml").exit_code == 2);
}

TEST_CASE("work budget rejects oversized sweeps") {
    tmpdir();
    const auto r = run_cli("reduce --n 25 --steps 1 --out cli_test_tmp/too-big.json");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("TRIGRID_WORK_BUDGET") != std::string::npos);
}

TEST_CASE("verify uniform-center") {
    tmpdir();
    const auto r = run_cli("verify uniform-center --s 1 --n 4..10");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("check,n,s,part,scope,status,detail") != std::string::npos);
    CHECK(r.output.find("fail") == std::string::npos);
}

TEST_CASE("verify vanishing-ones on a narrow range") {
    tmpdir();
    const auto r = run_cli("verify vanishing-ones --n 2..6");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("vanishing-ones,3,1,b,conjecture,pass") != std::string::npos);
    CHECK(r.output.find("vanishing-ones,4,1,b,theorem,pass") != std::string::npos);
}

TEST_CASE("verify sequences emits the L/B table") {
    tmpdir();
    const auto r = run_cli("verify sequences --s-max 16");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("s,L,B,L_float,B_float") != std::string::npos);
    CHECK(r.output.find("1,2/3,1/1,") != std::string::npos);
    CHECK(r.output.find("4,89/256,224369/167424,") != std::string::npos);
}

TEST_CASE("verify corollary-6-3 surfaces the printed-form comparison") {
    tmpdir();
    const auto r = run_cli("verify corollary-6-3 --s-max 6");
    CHECK(r.exit_code == 0);  // printed-form rows are report-only
    CHECK(r.output.find("s,B_next,printed_rhs,printed_holds,derived_holds") != std::string::npos);
    CHECK(r.output.find("0,1/1,1/1,true,true") != std::string::npos);
    CHECK(r.output.find("1,13/12,1/1,false,true") != std::string::npos);
}

TEST_CASE("verify gcd always exits zero") {
    tmpdir();
    const auto r = run_cli("verify gcd --s-max 12");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("variant,s,num_first,num_second,gcd,greater_than_one") != std::string::npos);
}

TEST_CASE("oracle-check certifies small grids") {
    tmpdir();
    const auto r = run_cli("oracle-check --n-max 4");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("n=1: corner resistance 2/3") != std::string::npos);
    CHECK(r.output.find("n=4") != std::string::npos);
}

TEST_CASE("asymptotics emits the documented header") {
    tmpdir();
    const auto r = run_cli("asymptotics --n-max 6");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find(
              "n,e,e_float,abs_err_vs_limit,r,r_float,exp_diff,r_over_harmonic,tail_ratio_mid,"
              "tail_ratio_last") != std::string::npos);
    CHECK(r.output.find("3,4/7,") != std::string::npos);
}

TEST_CASE("export writes the weighted-graph edge list") {
    tmpdir();
    REQUIRE(run_cli("reduce --n 2 --steps 0 --out cli_test_tmp/t2e.json").exit_code == 0);
    const auto csv = run_cli("export --grid cli_test_tmp/t2e.json");
    CHECK(csv.exit_code == 0);
    CHECK(csv.output.find("x1,y1,x2,y2,conductance,resistance") != std::string::npos);

    const auto json = run_cli("export --grid cli_test_tmp/t2e.json --format json --out cli_test_tmp/t2e.graph.json");
    CHECK(json.exit_code == 0);
    const auto parsed = nlohmann::json::parse(slurp("cli_test_tmp/t2e.graph.json"));
    CHECK(parsed["vertices"].size() == 6);
    CHECK(parsed["edges"].size() == 9);
}

TEST_CASE("deterministic outputs for fixed arguments") {
    tmpdir();
    const auto a = run_cli("asymptotics --n-max 5");
    const auto b = run_cli("asymptotics --n-max 5");
    CHECK(a.output == b.output);
    const auto c = run_cli("verify sequences --s-max 8");
    const auto d = run_cli("verify sequences --s-max 8");
    CHECK(c.output == d.output);
}

}  // TEST_SUITE
