#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "bmgame/cli.hpp"
#include "bmgame/generators.hpp"
#include "bmgame/instance.hpp"

using namespace bmgame;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    int status = 0;
    std::string out;
    std::string err;
};

RunResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int status = run_cli(args, out, err);
    return {status, out.str(), err.str()};
}

fs::path temp_file(const std::string& name, const std::string& content) {
    fs::path path = fs::temp_directory_path() / ("bmgame_test_" + name);
    std::ofstream f(path, std::ios::binary);
    f << content;
    return path;
}

} // namespace

TEST_CASE("allocate on the smallest tight family") {
    RunResult r = run({"allocate", "--family", "1,3,1"});
    REQUIRE(r.status == kExitOk);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["alpha"] == "2/3");
    CHECK(doc["allocation_total"] == "2");
    CHECK(doc["lp_value"] == "3");
    CHECK(doc["cycles"].size() == 2);
    for (auto& a : doc["allocation"]) CHECK(a["a"] == "1/3");
}

TEST_CASE("allocate on a bipartite instance reports alpha 1") {
    fs::path path =
        temp_file("bip.json", save_instance(gen_random(6, Rat(1, 2), 3, 20, 42, true)));
    RunResult r = run({"allocate", "--input", path.string()});
    REQUIRE(r.status == kExitOk);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["alpha"] == "1");
    CHECK(doc["cycles"].empty());
}

TEST_CASE("malformed input exits with the input-error status") {
    fs::path path = temp_file(
        "bad.json",
        R"({"vertices": [{"id": 1, "b": 1}], "edges": [{"u": 1, "v": 1, "w": 2}]})");
    RunResult r = run({"allocate", "--input", path.string()});
    CHECK(r.status == kExitInputError);
    CHECK(r.err.find("self-loop at vertex '1'") != std::string::npos);

    RunResult missing = run({"allocate", "--input", "/nonexistent/file.json"});
    CHECK(missing.status == kExitInputError);

    RunResult usage = run({"allocate"});
    CHECK(usage.status == kExitInputError);
}

TEST_CASE("verify accepts tight families and their connected variants") {
    for (std::string family : {"1,3,1", "1,5,1", "2,3,3", "1,3,1,link"}) {
        RunResult r = run({"verify", "--family", family});
        CHECK(r.status == kExitOk);
        CHECK(r.out.find("in-core: yes") != std::string::npos);
    }
    // 18 players still fit the default node budget
    RunResult big = run({"verify", "--family", "3,3,1"});
    CHECK(big.status == kExitOk);
    // 20 players exhaust it, which maps to the budget exit status
    RunResult starved = run({"verify", "--family", "2,5,3"});
    CHECK(starved.status == kExitBudget);
}

TEST_CASE("verify rejects a doctored report") {
    fs::path inst_path = temp_file("tri.json", save_instance(build_instance(
                                                   "t", {{"0", 1}, {"1", 1}, {"2", 1}},
                                                   {{"0", "1", 1}, {"1", "2", 1}, {"0", "2", 1}})));
    fs::path report_path = temp_file("doctored.json", R"({
      "alpha": "2/3",
      "allocation": [
        {"id": 0, "a": "1/5"}, {"id": 1, "a": "1/5"}, {"id": 2, "a": "1/5"}
      ]
    })");
    RunResult r = run({"verify", "--input", inst_path.string(), "--report",
                       report_path.string()});
    CHECK(r.status == kExitViolation);
    CHECK(r.out.find("in-core: no") != std::string::npos);
    CHECK(r.out.find("violation:") != std::string::npos);
}

TEST_CASE("verify at an explicit audit factor") {
    RunResult r = run({"verify", "--family", "1,3,1", "--alpha", "2/3"});
    CHECK(r.status == kExitOk);
}

TEST_CASE("verify on a seeded random suite") {
    for (int k = 0; k < 10; ++k) {
        std::string params = std::to_string(3 + k % 6) + ",1/2,3,12";
        RunResult r = run({"verify", "--random", params, "--seed", std::to_string(700 + k)});
        CHECK(r.status == kExitOk);
    }
}

TEST_CASE("gap output line on a single triangle") {
    fs::path path = temp_file("tri_gap.json", save_instance(build_instance(
                                                  "t", {{"0", 1}, {"1", 1}, {"2", 1}},
                                                  {{"0", "1", 1}, {"1", "2", 1}, {"0", "2", 1}})));
    RunResult r = run({"gap", "--input", path.string()});
    REQUIRE(r.status == kExitOk);
    CHECK(r.out == "ip=1 lp=3/2 ratio=2/3\n");

    fs::path edge_path = temp_file("edge_gap.json", save_instance(build_instance(
                                                        "e", {{"1", 1}, {"2", 1}},
                                                        {{"1", "2", 5}})));
    RunResult edge = run({"gap", "--input", edge_path.string()});
    CHECK(edge.out == "ip=5 lp=5 ratio=1\n");

    fs::path c5_path = temp_file("c5_gap.json", save_instance(build_instance(
                                                    "c5", {{"0", 1}, {"1", 1}, {"2", 1},
                                                           {"3", 1}, {"4", 1}},
                                                    {{"0", "1", 1}, {"1", "2", 1}, {"2", "3", 1},
                                                     {"3", "4", 1}, {"0", "4", 1}})));
    RunResult c5 = run({"gap", "--input", c5_path.string()});
    CHECK(c5.out == "ip=2 lp=5/2 ratio=4/5\n");
}

TEST_CASE("gamma command and budget mapping") {
    RunResult r = run({"gamma", "--family", "1,3,1"});
    REQUIRE(r.status == kExitOk);
    CHECK(r.out == "gamma=2\n");

    RunResult starved = run({"gamma", "--random", "9,1,3,20", "--seed", "11", "--budget", "10"});
    CHECK(starved.status == kExitBudget);
}

TEST_CASE("identical invocations produce byte-identical output") {
    std::vector<std::string> gen_args{"gen", "--random", "8,1/2,3,20", "--seed", "424242"};
    CHECK(run(gen_args).out == run(gen_args).out);

    std::vector<std::string> alloc_args{"allocate", "--family", "2,5,3"};
    RunResult a1 = run(alloc_args), a2 = run(alloc_args);
    CHECK(a1.out == a2.out);
    CHECK(a1.status == kExitOk);

    std::vector<std::string> solve_args{"solve", "--random", "7,2/3,2,9", "--seed", "3"};
    CHECK(run(solve_args).out == run(solve_args).out);
}

TEST_CASE("gen writes loadable documents to files") {
    fs::path path = fs::temp_directory_path() / "bmgame_test_gen_out.json";
    RunResult r = run({"gen", "--family", "1,5,3", "--output", path.string()});
    REQUIRE(r.status == kExitOk);
    CHECK(r.out.empty());
    std::ifstream f(path);
    std::stringstream ss;
    ss << f.rdbuf();
    Instance inst = load_instance(ss.str());
    CHECK(inst.vertex_count() == 10);
    CHECK(inst == gen_tight_family(1, 5, 3, false));
}
