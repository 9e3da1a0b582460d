#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ekc/cli.hpp"
#include "fixtures.hpp"

using namespace ekc;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(EKC_DATA_DIR) + "/" + name; }

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "ekc_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST(Cli, Stats) {
  const Outcome r = run({"stats", data("demo6.txt")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "6 10 3.33 3\n");
}

TEST(Cli, SolveDemo6) {
  const Outcome r = run({"solve", data("demo6.txt"), "--k", "3", "--b", "1", "--algo", "ekc"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["anchors"], Json::parse("[[1,4]]"));
  EXPECT_EQ(j["totals"]["followers"], 2);
  EXPECT_EQ(j["initial_core_size"], 4);
  EXPECT_EQ(j["config"]["algo"], "ekc");
  EXPECT_FALSE(j["iterations"][0].contains("follower_ids"));
  const auto& c = j["iterations"][0]["counters"];
  EXPECT_EQ(c["produced"].get<int>(),
            c["pruned_thm4_scope"].get<int>() + c["pruned_thm5"].get<int>() +
                c["pruned_thm6"].get<int>() + c["evaluated"].get<int>() + c["reused"].get<int>());
}

TEST(Cli, SolveKeyOrderIsStable) {
  const Json j = Json::parse(run({"solve", data("demo6.txt"), "--k", "3"}).out);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"config", "graph", "initial_core_size", "iterations",
                                            "anchors", "totals", "environment"}));
}

TEST(Cli, SolveVerboseAndFiles) {
  const fs::path json = scratch("report.json");
  const fs::path csv = scratch("iter.csv");
  const Outcome r = run({"solve", data("demo8.txt"), "--k", "3", "--b", "2", "--verbose", "--out",
                     json.string(), "--csv", csv.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "anchors: (1,4)\nfollowers: 2\n");
  const Json j = Json::parse(slurp(json));
  EXPECT_EQ(j["iterations"][0]["follower_ids"], Json::parse("[4,5]"));
  EXPECT_TRUE(j["totals"]["stopped_early"].get<bool>());
  std::istringstream lines(slurp(csv));
  std::string header, row1, row2;
  std::getline(lines, header);
  std::getline(lines, row1);
  std::getline(lines, row2);
  EXPECT_EQ(header,
            "iter,edge_u,edge_v,followers,core_size,produced,pruned4,pruned5,pruned6,evaluated,ms");
  EXPECT_EQ(row1.rfind("1,1,4,2,6,", 0), 0u) << row1;
  EXPECT_EQ(row2.rfind("2,,,0,6,", 0), 0u) << row2;
}

TEST(Cli, SolveEveryAlgorithm) {
  for (const char* algo : {"naive", "baseline", "bl+o1", "bl+o2", "bl+of", "ekc", "exact",
                           "rand", "degree", "layer"}) {
    const Outcome r = run({"solve", data("demo6.txt"), "--k", "3", "--algo", algo});
    ASSERT_EQ(r.code, 0) << algo << ": " << r.err;
    EXPECT_GE(Json::parse(r.out)["totals"]["followers"].get<int>(), 1) << algo;
  }
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"stats"}).code, 1);
  EXPECT_EQ(run({"stats", data("demo6.txt"), "--bogus"}).code, 1);
  EXPECT_EQ(run({"solve", data("demo6.txt")}).code, 1);
  EXPECT_EQ(run({"solve", data("demo6.txt"), "--k", "3", "--algo", "magic"}).code, 1);
  EXPECT_EQ(run({"solve", data("demo6.txt"), "--k", "1"}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, IoErrors) {
  EXPECT_EQ(run({"stats", "/nonexistent/graph.txt"}).code, 2);
  const fs::path bad = scratch("bad.txt");
  std::ofstream(bad) << "1 2\n3 oops\n";
  const Outcome r = run({"stats", bad.string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line 2"), std::string::npos) << r.err;
}

TEST(Cli, Exact) {
  const Outcome r = run({"exact", data("demo6.txt"), "--k", "3", "--b", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["followers"], 2);
  EXPECT_EQ(j["combinations"], 10);
  EXPECT_EQ(run({"exact", data("demo8.txt"), "--k", "3", "--b", "3", "--limit", "5"}).code, 4);
  EXPECT_EQ(run({"exact", data("demo6.txt"), "--k", "3", "--mode", "fuzzy"}).code, 1);
}

TEST(Cli, GenErRoundTrips) {
  const Outcome r = run({"gen", "er", "--n", "40", "--p", "0.12", "--seed", "7"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream in(r.out);
  EXPECT_EQ(parse_edge_list(in).edges(), gen_er(40, 0.12, 7).edges());
}

TEST(Cli, GenMcAndNonsub) {
  const fs::path mc = scratch("mc.txt");
  ASSERT_EQ(run({"gen", "mc", "--sets", "1,2;2,3,4;1,4", "--k", "3", "--out", mc.string()}).code, 0);
  EXPECT_EQ(run({"stats", mc.string()}).out.substr(0, 3), "29 ");
  const Outcome ns = run({"gen", "nonsub", "--k", "3"});
  ASSERT_EQ(ns.code, 0);
  std::istringstream in(ns.out);
  EXPECT_EQ(parse_edge_list(in).vertex_count(), 9u);
  const Outcome degenerate = run({"gen", "mc", "--sets", "1;1,2", "--k", "3"});
  EXPECT_EQ(degenerate.code, 0);
  EXPECT_NE(degenerate.err.find("T1"), std::string::npos);
  EXPECT_EQ(run({"gen", "mc", "--sets", "1,2", "--k", "2"}).code, 1);
}

TEST(Cli, Layers) {
  const Outcome r = run({"layers", data("demo8.txt"), "--k", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "L1: 4 6 7\nL2: 5\nd*: 4=2 6=1 7=1 5=2\n");
}

TEST(Cli, VerifyEr) {
  const fs::path er = scratch("er40.txt");
  ASSERT_EQ(run({"gen", "er", "--n", "40", "--p", "0.12", "--seed", "0", "--out", er.string()}).code,
            0);
  const Outcome r = run({"verify", er.string(), "--k", "4"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find(" 0 mismatches"), std::string::npos);
}
