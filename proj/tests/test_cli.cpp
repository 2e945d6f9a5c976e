#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = rcn::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("rcn_cli_test_" + name)).string();
}

std::string data(const std::string& name) { return std::string(RCN_TEST_DATA_DIR) + "/" + name; }

}  // namespace

TEST(Cli, BoundsReportsCrossingLowerBound) {
  const Result r = run({"bounds", "--n", "19"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("crossing lower bound: 1318"), std::string::npos);
  EXPECT_NE(r.out.find("halving upper bound: 56"), std::string::npos);
  const Result csv = run({"bounds", "--n", "21", "--csv"});
  EXPECT_EQ(csv.out.rfind("k,refined,simple,quadratic,quadratic_ceiling,best\n", 0), 0u);
  EXPECT_NE(csv.out.find("# crossing_lower_bound,2055"), std::string::npos);
  const Result json = run({"bounds", "--n", "17", "--json"});
  EXPECT_NE(json.out.find("\"crossing_lower_bound\":798"), std::string::npos);
  EXPECT_EQ(run({"bounds", "--n", "3"}).code, 2);
}

TEST(Cli, CensusOnHexagon) {
  const Result r = run({"census", data("hexagon.txt")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("e: 6 6 3\n"), std::string::npos);
  const Result csv = run({"census", data("hexagon.txt"), "--csv"});
  EXPECT_EQ(csv.out, "n,k,e_k,E_k,halving\n6,0,6,6,3\n6,1,6,12,3\n6,2,3,15,3\n");
  const Result json = run({"census", data("hexagon.txt"), "--json"});
  EXPECT_EQ(json.out, "{\"E\":[6,12,15],\"e\":[6,6,3],\"halving\":3,\"n\":6}\n");
}

TEST(Cli, BadInputExitsWithTwo) {
  EXPECT_EQ(run({"census", data("malformed.txt")}).code, 2);
  const Result collinear = run({"crossings", data("collinear.txt")});
  EXPECT_EQ(collinear.code, 2);
  EXPECT_NE(collinear.err.find("1, 2, 3"), std::string::npos);
  EXPECT_EQ(run({"verify", data("does_not_exist.txt")}).code, 2);
  EXPECT_EQ(run({"epsilon", "--t0", "0.9"}).code, 2);
  EXPECT_NE(run({"census"}).code, 0);
  EXPECT_NE(run({}).code, 0);
}

TEST(Cli, CrossingsMethods) {
  const Result both = run({"crossings", data("halving8.txt"), "--method", "both"});
  EXPECT_EQ(both.code, 0);
  EXPECT_NE(both.out.find("bruteforce: "), std::string::npos);
  EXPECT_NE(both.out.find("identity: "), std::string::npos);
  const Result brute = run({"crossings", data("hexagon.txt"), "--method", "brute"});
  EXPECT_EQ(brute.out, "crossings: 15\n");
  EXPECT_NE(run({"crossings", data("hexagon.txt"), "--method", "magic"}).code, 0);
}

TEST(Cli, GenerateIsDeterministicAndVerifies) {
  const std::string path = temp_path("gen.txt");
  const Result a = run({"generate", "--kind", "random-disc", "--n", "10", "--seed", "1"});
  const Result b = run({"generate", "--kind", "random-disc", "--n", "10", "--seed", "1"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(run({"generate", "--n", "10", "--seed", "1", "-o", path}).code, 0);
  std::ifstream f(path);
  std::stringstream content;
  content << f.rdbuf();
  EXPECT_EQ(content.str(), a.out);
  EXPECT_EQ(run({"verify", path}).code, 0);
  std::filesystem::remove(path);
}

TEST(Cli, VerifyManySeededSets) {
  const std::string path = temp_path("verify.txt");
  for (int seed = 1; seed <= 100; ++seed) {
    const std::string n = std::to_string(4 + seed % 8);
    ASSERT_EQ(run({"generate", "--n", n, "--seed", std::to_string(seed), "--scale", "200", "-o", path}).code, 0);
    const Result r = run({"verify", path});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
  }
  std::filesystem::remove(path);
}

TEST(Cli, ReduceWritesTrace) {
  const std::string trace = temp_path("trace.json");
  const Result r = run({"reduce", data("hexagon.txt"), "--trace", trace});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("hull: 6 -> 3"), std::string::npos);
  std::ifstream f(trace);
  std::stringstream content;
  content << f.rdbuf();
  const std::string text = content.str();
  EXPECT_NE(text.find("\"steps\""), std::string::npos);
  EXPECT_NE(text.find("\"delta\": -"), std::string::npos);
  EXPECT_NE(text.find("\"t\": \""), std::string::npos);
  EXPECT_EQ(run({"reduce", data("hexagon.txt"), "--json"}).out,
            run({"reduce", data("hexagon.txt"), "--json"}).out);
  std::filesystem::remove(trace);
}

TEST(Cli, Epsilon) {
  const Result r = run({"epsilon", "--t0", "0.4981"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "epsilon(0.4981) = 1.400635e-06\n");
}
