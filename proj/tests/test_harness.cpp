#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "mst/harness.hpp"
#include "mst/tree.hpp"

using namespace mst;
using json = nlohmann::ordered_json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome exec(const RunConfig& c) {
  std::ostringstream out, err;
  const int code = run(c, out, err);
  return {code, out.str(), err.str()};
}

RunConfig verify_config(std::size_t max_n, std::vector<std::string> checks = {}) {
  RunConfig c;
  c.command = Command::Verify;
  c.max_n = max_n;
  c.checks = std::move(checks);
  c.include_wall_time = false;
  return c;
}

}  // namespace

TEST_CASE("verify exit codes") {
  CHECK(exec(verify_config(0)).code == kExitUsage);
  CHECK(exec(verify_config(15)).code == kExitBudget);
  CHECK(exec(verify_config(8)).code == kExitPass);
  CHECK(exec(verify_config(8, {"2.6"})).code == kExitViolation);
  CHECK(exec(verify_config(8, {"2.5", "2.6"})).code == kExitPass);
  CHECK(exec(verify_config(8, {"bogus"})).code == kExitUsage);
}

TEST_CASE("verify report shape") {
  const Outcome o = exec(verify_config(7));
  REQUIRE(o.code == kExitPass);
  const json j = json::parse(o.out);
  CHECK(j["pass"] == true);
  CHECK(j["corpus_size"] == 1 + 1 + 1 + 2 + 3 + 6 + 11);
  CHECK_FALSE(j.contains("wall_time_s"));
  CHECK(j["details"].contains("theorem"));
  CHECK(j["details"].contains("inequalities/all-roots"));
  CHECK(j["details"].contains("inequalities/deg-ge-2-roots"));
  CHECK(j["details"].contains("parts"));
  std::size_t expected = 0;
  for (const auto& v : j["violations"]) expected += v["expected"] == true;
  CHECK(expected == j["violations"].size());
  CHECK(expected == 3);
}

TEST_CASE("verify output is deterministic across shard counts") {
  RunConfig a = verify_config(9);
  RunConfig b = verify_config(9);
  b.shards = 4;
  CHECK(exec(a).out == exec(b).out);
}

TEST_CASE("stats on p22") {
  RunConfig c;
  c.command = Command::Stats;
  c.tree_source = "p22";
  const Outcome o = exec(c);
  REQUIRE(o.code == kExitPass);
  const json j = json::parse(o.out);
  CHECK(j["n_v"] == "4");
  CHECK(j["r_v"] == "8");
  CHECK(j["n_t"] == "6");
  CHECK(j["r_t"] == "10");
  CHECK(j["local_mean"]["exact"] == "2/1");
  CHECK(j["global_mean"]["exact"] == "5/3");

  c.format = ReportFormat::Csv;
  const Outcome csv = exec(c);
  CHECK(csv.out.rfind("key,value\n", 0) == 0);
  CHECK(csv.out.find("n_t,6\n") != std::string::npos);
}

TEST_CASE("oracle agrees with the engine") {
  RunConfig c;
  c.command = Command::Oracle;
  c.tree_source = "star(4)";
  const json j = json::parse(exec(c).out);
  CHECK(j["agrees_with_engine"] == true);
  CHECK(j["n_v"] == "16");
  CHECK(j["r_t"] == "52");
}

TEST_CASE("contract serializes exact values as strings") {
  RunConfig c;
  c.command = Command::Contract;
  c.tree_source = "path(4)";
  c.edge = Edge{1, 2};
  const json j = json::parse(exec(c).out);
  CHECK(j["difference"]["exact"] == "1/3");
  CHECK(j["excess"]["exact"] == "0/1");
  CHECK(j["class"] == "pendant-path");

  c.edge = Edge{0, 2};
  CHECK(exec(c).code == kExitUsage);
}

TEST_CASE("tree files are read from disk") {
  const auto path = std::filesystem::temp_directory_path() / "mst_harness_test.tree";
  {
    std::ofstream f(path);
    f << "# double star\n6\n0 1\n0 2\n0 3\n3 4\n3 5\n";
  }
  RunConfig c;
  c.command = Command::Contract;
  c.tree_source = path.string();
  c.edge = Edge{0, 3};
  const json j = json::parse(exec(c).out);
  CHECK(j["difference"]["exact"] == "2/5");
  CHECK(j["class"] == "internal");
  std::filesystem::remove(path);
}

TEST_CASE("asymptotic") {
  RunConfig c;
  c.command = Command::Asymptotic;
  c.side1_source = "p22";
  c.side2_source = "p22";
  c.l_values = {1, 10, 100, 1000};
  const Outcome o = exec(c);
  CHECK(o.code == kExitPass);
  const json j = json::parse(o.out);
  CHECK(j["positive_decreasing"] == true);
  CHECK(j["l1_cross_check"] == true);
  CHECK(j["series"][0]["excess"]["exact"] == "1/15");

  c.side1_source = "path(3)";
  c.root1 = 0;
  CHECK(exec(c).code == kExitUsage);
}

TEST_CASE("gen and extremal") {
  RunConfig g;
  g.command = Command::Gen;
  g.n = 6;
  const Outcome o = exec(g);
  CHECK(o.code == kExitPass);
  CHECK(parse_tree_stream(o.out).size() == 6);
  g.n = 20;
  CHECK(exec(g).code == kExitBudget);

  RunConfig e;
  e.command = Command::Extremal;
  e.n = 5;
  e.mode = "exhaustive";
  e.format = ReportFormat::Text;
  const Outcome x = exec(e);
  CHECK(x.code == kExitPass);
  CHECK(x.out.find("mode: exhaustive") != std::string::npos);
}

TEST_CASE("out path") {
  const auto path = std::filesystem::temp_directory_path() / "mst_harness_out.json";
  RunConfig c = verify_config(5);
  c.out_path = path.string();
  const Outcome o = exec(c);
  CHECK(o.code == kExitPass);
  CHECK(o.out.empty());
  std::ifstream in(path);
  CHECK(json::parse(in)["pass"] == true);
  std::filesystem::remove(path);
}
