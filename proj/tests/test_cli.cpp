// Expected residues below were frozen from scripts/gen_expected.py, which
// recomputes every quantity along an independent route.
#include <catch2/catch_amalgamated.hpp>

#include <padichg/cli.hpp>

#include <regex>
#include <sstream>
#include <string>
#include <vector>

using namespace padichg;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(std::move(args), out, err);
    return RunResult{code, out.str(), err.str()};
}

std::string strip_elapsed(const std::string& s) {
    static const std::regex pat("\"elapsed_ms\":\\s*\\d+");
    return std::regex_replace(s, pat, "\"elapsed_ms\":0");
}

}  // namespace

TEST_CASE("coeffs emits the CSV table", "[cli]") {
    RunResult r = run({"coeffs", "--p", "3", "--a", "1", "--s", "1", "--c", "1", "--n", "1",
                       "--deg", "6"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "k,A_k,v_p,B_k,prec\n"
          "0,1,0,1,6\n"
          "1,1,0,2,6\n"
          "2,1,0,0,5\n"
          "3,1,0,1,6\n"
          "4,1,0,2,6\n"
          "5,1,0,0,5\n");
}

TEST_CASE("fn renders digits, csv and json", "[cli]") {
    RunResult text = run({"fn", "hat", "--p", "3", "--a", "1/2", "--c", "4", "--n", "1",
                          "--deg", "4"});
    CHECK(text.code == 0);
    CHECK(text.out == "0\t2\n1\t1\n2\t1\n3\t1\n");

    RunResult csv = run({"fn", "dwork", "--p", "3", "--a", "1/2", "--s", "2", "--n", "2",
                         "--deg", "5", "--format", "csv"});
    CHECK(csv.code == 0);
    CHECK(csv.out == "k,residue\n0,1\n1,7\n2,0\n3,6\n4,3\n");

    RunResult js = run({"fn", "log", "--p", "5", "--a", "1/3", "--s", "2", "--c", "6", "--n", "2",
                        "--deg", "4", "--format", "json"});
    CHECK(js.code == 0);
    ordered_json parsed = ordered_json::parse(js.out);
    CHECK(parsed["p"] == 5);
    CHECK(parsed["precision"] == 2);
    CHECK(parsed["coeffs"] == ordered_json::array({11, 10, 3, 9}));
}

TEST_CASE("verify exit codes cover the contract", "[cli]") {
    // 0: pass
    CHECK(run({"verify", "hat", "--p", "5", "--a", "1/3", "--s", "2", "--c", "6", "--n", "2"}).code ==
          0);
    // 1: counterexample (injected)
    RunResult fail = run({"verify", "hat", "--p", "5", "--a", "1/3", "--s", "2", "--c", "6", "--n",
                          "2", "--inject-fault", "7"});
    CHECK(fail.code == 1);
    ordered_json rep = ordered_json::parse(fail.out);
    CHECK(rep["pass"] == false);
    REQUIRE(rep["first_failure"].is_object());
    CHECK(rep["first_failure"]["degree"] == 7);
    // 2: not enough working precision to certify
    RunResult weak = run({"verify", "hat", "--p", "3", "--a", "1/2", "--n", "2", "--prec", "2"});
    CHECK(weak.code == 2);
    CHECK(weak.err.find("precision") != std::string::npos);
    // 3: invalid parameters
    CHECK(run({"verify", "hat", "--p", "9", "--a", "1/2"}).code == 3);
    CHECK(run({"verify", "hat", "--p", "3", "--a", "1/3"}).code == 3);
    CHECK(run({"verify", "hat", "--p", "2", "--a", "1/3", "--c", "3"}).code == 3);
    CHECK(run({"verify", "nonsense", "--p", "3", "--a", "1"}).code == 3);
    CHECK(run({"verify", "log", "--p", "3"}).code == 3);  // missing --a
}

TEST_CASE("verify report schema", "[cli]") {
    RunResult r = run({"verify", "log", "--p", "5", "--a", "1/3", "--s", "2", "--c", "6", "--n", "2"});
    ordered_json rep = ordered_json::parse(r.out);
    std::vector<std::string> keys;
    for (auto it = rep.begin(); it != rep.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"check", "params", "pass", "conjectural", "modulus",
                                           "degrees_checked", "first_failure", "elapsed_ms"});
    CHECK(rep["check"] == "log");
    CHECK(rep["params"]["p"] == 5);
    CHECK(rep["params"]["a"] == "1/3");
    CHECK(rep["params"]["c"] == "6");
    CHECK(rep["params"]["M"] == 60);   // 2p^n + 2p
    CHECK(rep["modulus"] == 25);
    CHECK(rep["degrees_checked"] == ordered_json::array({0, 59}));
    CHECK(rep["first_failure"].is_null());
}

TEST_CASE("twist constant sugar resolves against p", "[cli]") {
    RunResult r = run({"verify", "hat", "--p", "7", "--a", "1/3", "--c", "1+p"});
    CHECK(r.code == 0);
    CHECK(ordered_json::parse(r.out)["params"]["c"] == "8");
    r = run({"verify", "hat", "--p", "7", "--a", "1/3", "--c", "1-p"});
    CHECK(ordered_json::parse(r.out)["params"]["c"] == "-6");
    r = run({"verify", "hat", "--p", "7", "--a", "1/3", "--c", "1+2*p"});
    CHECK(ordered_json::parse(r.out)["params"]["c"] == "15");
}

TEST_CASE("scan expands the grid and skips invalid points", "[cli]") {
    RunResult r = run({"scan", "--check", "hat", "--p", "3,5", "--a", "1/3,1/2,2/3"});
    CHECK(r.code == 0);
    std::vector<ordered_json> rows;
    std::istringstream lines(r.out);
    std::string line;
    while (std::getline(lines, line)) rows.push_back(ordered_json::parse(line));
    REQUIRE(rows.size() == 5);  // 4 valid points + summary
    CHECK(rows[0]["params"]["p"] == 3);
    CHECK(rows[0]["params"]["a"] == "1/2");
    CHECK(rows[1]["params"]["p"] == 5);
    CHECK(rows[1]["params"]["a"] == "1/3");
    for (std::size_t i = 0; i < 4; ++i) CHECK(rows[i]["pass"] == true);
    CHECK(rows[4] == ordered_json{{"pass", 4},
                                  {"fail", 0},
                                  {"conjectural_pass", 0},
                                  {"conjectural_fail", 0},
                                  {"error", 0}});
}

TEST_CASE("scan reruns are byte-identical apart from timing", "[cli]") {
    std::vector<std::string> args{"scan", "--check", "transform-log", "--p", "7,13",
                                  "--a", "1/3,2/3", "--s", "1,2", "--c", "1+p", "--n", "1"};
    RunResult r1 = run(args);
    RunResult r2 = run(args);
    CHECK(r1.code == 0);
    CHECK(strip_elapsed(r1.out) == strip_elapsed(r2.out));
}

TEST_CASE("scan fault targeting flips exactly one grid point", "[cli]") {
    RunResult r = run({"scan", "--check", "hat", "--p", "3,5", "--a", "1/3,1/2,2/3",
                       "--inject-fault", "4", "--fault-at", "2"});
    CHECK(r.code == 1);
    std::vector<ordered_json> rows;
    std::istringstream lines(r.out);
    std::string line;
    while (std::getline(lines, line)) rows.push_back(ordered_json::parse(line));
    REQUIRE(rows.size() == 5);
    CHECK(rows[2]["pass"] == false);
    CHECK(rows[2]["first_failure"]["degree"] == 4);
    CHECK(rows[0]["pass"] == true);
    CHECK(rows[1]["pass"] == true);
    CHECK(rows[3]["pass"] == true);
    CHECK(rows[4]["fail"] == 1);
}

TEST_CASE("scan over blal iterates the branch index", "[cli]") {
    RunResult r = run({"scan", "--check", "blal", "--p", "3", "--n", "1,2"});
    CHECK(r.code == 0);
    std::istringstream lines(r.out);
    std::string line;
    int reports = 0;
    while (std::getline(lines, line)) ++reports;
    CHECK(reports == 7);  // l in {0,1,2} for each n, plus the summary
}

TEST_CASE("help and bad options", "[cli]") {
    RunResult help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("coeffs") != std::string::npos);
    CHECK(run({"frobnicate"}).code == 3);
    CHECK(run({"verify", "hat", "--p", "not-a-number", "--a", "1"}).code == 3);
    CHECK(run({}).code == 3);  // a subcommand is required
}
