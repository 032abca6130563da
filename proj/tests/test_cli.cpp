#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "fixtures.hpp"

using spg::testing::data_path;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = spg::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json golden(const std::string& name) {
  std::ifstream in(std::string(SPG_TEST_GOLDEN_DIR) + "/" + name);
  return nlohmann::json::parse(in);
}

}  // namespace

TEST(Cli, GoldenOutputs) {
  const std::vector<std::pair<std::string, std::vector<std::string>>> cases = {
      {"fig1_values.json", {"values", data_path("fig1.spg")}},
      {"fig2_values.json", {"values", data_path("fig2.spg")}},
      {"fig3_values.json", {"values", data_path("fig3.spg")}},
      {"fig1_validate.json", {"validate", data_path("fig1.spg")}},
      {"fig2_det.json", {"synthesize-det", data_path("fig2.spg"), "--n", "3"}},
      {"fig1_optimal.json", {"check-optimal", data_path("fig1.spg")}},
      {"fig3_optimal.json", {"check-optimal", data_path("fig3.spg")}},
      {"fig1_rand.json",
       {"synthesize-rand", data_path("fig1.spg"), "--epsilon", "1/10", "--v0", "v_Min"}},
      {"fig1_half_eval.json",
       {"evaluate-rand", data_path("fig1.spg"), "--strategy", data_path("fig1_half.json")}},
  };
  for (const auto& [file, args] : cases) {
    Result r = run(args);
    ASSERT_EQ(r.code, 0) << file << ": " << r.err;
    EXPECT_EQ(nlohmann::json::parse(r.out), golden(file)) << file;
  }
}

TEST(Cli, ConvertAndEvaluate) {
  Result conv = run({"convert", data_path("fig1.spg"), "--from", "rand", "--strategy",
                     data_path("fig1_half.json"), "--v0", "v_Min"});
  ASSERT_EQ(conv.code, 0) << conv.err;
  auto j = nlohmann::json::parse(conv.out);
  EXPECT_EQ(j["alpha"], "94");
  EXPECT_EQ(j["mval_v0"], "-1/1");
}

TEST(Cli, TextFormat) {
  Result r = run({"check-optimal", data_path("fig1.spg"), "--format", "text"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("early-stationarity-failed"), std::string::npos);
  Result before = run({"--format", "text", "values", data_path("fig3.spg")});
  EXPECT_EQ(before.code, 0);
  EXPECT_EQ(before.out.find('{'), std::string::npos);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"values", data_path("missing.spg")}).code, 2);
  EXPECT_EQ(run({"synthesize-rand", data_path("fig1.spg"), "--epsilon", "zero"}).code, 2);
  EXPECT_EQ(run({"synthesize-rand", data_path("fig1.spg"), "--epsilon", "0"}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"corpus-check", "--count", "0"}).code, 0);
}

TEST(Cli, Simulate) {
  std::vector<std::string> args = {"simulate", data_path("fig1.spg"), "--strategy",
                                   data_path("fig1_half.json"), "--v0", "v_Min",
                                   "--seed", "9", "--episodes", "20000"};
  Result a = run(args), b = run(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  auto j = nlohmann::json::parse(a.out);
  EXPECT_NEAR(j["mean_tp"].get<double>(), -1.0, 4 * j["stderr"].get<double>());
}
