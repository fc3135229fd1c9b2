/*
 * Copyright 2026 The uarank Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "uarank/cli.h"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "json.hpp"
#include "uarank/io.h"

namespace uarank {
namespace {

using ::testing::HasSubstr;
using ::testing::StartsWith;
using json = nlohmann::json;

std::string DataPath(const std::string& name) {
  return std::string(UARANK_DATA_DIR) + "/" + name;
}

std::string WriteTemp(const std::string& name, const std::string& text) {
  const std::string path = ::testing::TempDir() + "/" + name;
  std::ofstream(path) << text;
  return path;
}

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result Cli(std::vector<std::string> args) {
  args.insert(args.begin(), "uarank");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = RunCommandLine(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

json Structured(std::vector<std::string> args) {
  args.push_back("--format");
  args.push_back("structured");
  Result r = Cli(args);
  EXPECT_EQ(r.code, 0) << r.err;
  return json::parse(r.out);
}

TEST(CliTest, RankStabilityLowerBound) {
  json doc = Structured({"rank", "--fn", "ua", "--in", DataPath("stab_lb.csv")});
  const std::vector<double> row0 = doc["result"]["ranking"][0];
  EXPECT_EQ(row0, std::vector<double>({0.5, 0, 0.5}));
  EXPECT_EQ(doc["result"]["ranking"].size(), 3u);
  EXPECT_EQ(doc["config"]["fn"], "ua");

  Result table = Cli({"rank", "--fn", "ua", "--in", DataPath("stab_lb.csv")});
  EXPECT_EQ(table.code, 0);
  EXPECT_THAT(table.out, HasSubstr("0.500000   0.000000   0.500000"));
}

TEST(CliTest, StabilityOfIdenticalInputs) {
  json doc = Structured({"stability", "--fn", "ua", "--in", DataPath("stab_lb.csv"),
                         "--in2", DataPath("stab_lb.csv")});
  EXPECT_EQ(doc["result"]["infGap"], 0.0);
  EXPECT_EQ(doc["result"]["l1Dist"], 0.0);
  EXPECT_TRUE(doc["result"]["ratio"].is_null());
}

TEST(CliTest, StabilityLowerBoundPair) {
  json doc = Structured({"stability", "--fn", "ua", "--in", DataPath("stab_lb.csv"),
                         "--in2", DataPath("stab_lb_prime.csv")});
  EXPECT_DOUBLE_EQ(doc["result"]["infGap"].get<double>(), 0.5);
  EXPECT_DOUBLE_EQ(doc["result"]["l1Dist"].get<double>(), 1.0);
}

TEST(CliTest, AuditTheoremExact) {
  json doc = Structured({"audit", "theorem", "--model", DataPath("twotype.json"),
                         "--fn", "opt", "--n", "4", "--k", "1", "--group", "1",
                         "--exact"});
  EXPECT_NEAR(doc["result"]["gap"].get<double>(), 0.109375, 1e-12);
  EXPECT_EQ(doc["config"]["n"], 4);
  EXPECT_EQ(doc["config"]["k"], 1);
  EXPECT_EQ(doc["config"]["exact"], true);
}

TEST(CliTest, AuditTheoremSampledEchoesSeed) {
  json doc = Structured({"audit", "theorem", "--model", DataPath("twotype.json"),
                         "--fn", "mix", "--phi", "0.5", "--n", "4", "--k", "2",
                         "--group", "2", "--samples", "200", "--seed", "17"});
  EXPECT_EQ(doc["config"]["seed"], 17);
  EXPECT_EQ(doc["config"]["samples"], 200);
  EXPECT_EQ(doc["config"]["phi"], 0.5);
  EXPECT_GE(doc["result"]["mcError"].get<double>(), 0.0);
}

TEST(CliTest, AuditMultiaccuracyAndCalibration) {
  json ma = Structured({"audit", "multiaccuracy", "--model", DataPath("twotype.json")});
  EXPECT_NEAR(ma["result"]["alpha"].get<double>(), 0.05, 1e-12);
  json mc = Structured({"audit", "multicalibration", "--model",
                        DataPath("twotype.json"), "--delta", "0.5"});
  EXPECT_EQ(mc["config"]["delta"], 0.5);
  EXPECT_EQ(mc["result"]["cells"].size(), 4u);
}

TEST(CliTest, AuditCloseness) {
  json doc = Structured({"audit", "closeness", "--model", DataPath("twotype.json"),
                         "--n", "5", "--samples", "100", "--seed", "1"});
  EXPECT_EQ(doc["result"]["violations"], 0);
  EXPECT_NEAR(doc["result"]["epsilon"].get<double>(), 0.2, 1e-12);
}

TEST(CliTest, UtilityWithWeightsFile) {
  const std::string w = WriteTemp("w.txt", "1\n0.5\n0.25\n");
  json doc = Structured({"utility", "--fn", "opt", "--in", DataPath("stab_lb.csv"),
                         "--values", "0,1,5", "--weights", w});
  // tau = (2.5, 1, 1): opt gives 2.5 + 0.5 + 0.25.
  EXPECT_DOUBLE_EQ(doc["result"]["utility"].get<double>(), 3.25);
  EXPECT_DOUBLE_EQ(doc["result"]["normalizedUtility"].get<double>(), 1.0);
}

TEST(CliTest, OracleMatchesRank) {
  json a = Structured({"oracle", "--in", DataPath("stab_lb.csv")});
  json b = Structured({"rank", "--fn", "ua", "--in", DataPath("stab_lb.csv")});
  EXPECT_EQ(a["result"]["ranking"], b["result"]["ranking"]);
  json pl = Structured({"oracle", "--fn", "pl", "--in", DataPath("stab_lb.csv")});
  EXPECT_EQ(pl["result"]["ranking"].size(), 3u);
}

TEST(CliTest, StructuredOutputIsDeterministic) {
  const std::vector<std::string> args = {"rank", "--fn", "pl", "--in",
                                         DataPath("stab_lb.csv"), "--samples",
                                         "5000", "--seed", "3", "--format",
                                         "structured"};
  Result a = Cli(args), b = Cli(args);
  EXPECT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
}

TEST(CliTest, OutFile) {
  const std::string path = ::testing::TempDir() + "/report.json";
  Result r = Cli({"rank", "--fn", "ua", "--in", DataPath("stab_lb.csv"), "--out", path,
                  "--format", "structured"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  absl::StatusOr<std::string> text = ReadFile(path);
  ASSERT_TRUE(text.ok());
  EXPECT_EQ(json::parse(*text)["config"]["command"], "rank");
}

TEST(CliTest, ValidationErrors) {
  const std::string bad = WriteTemp("bad.csv", "0.5,0.4\n");
  const std::vector<std::vector<std::string>> cases = {
      {"rank", "--fn", "ua", "--in", bad},
      {"rank", "--fn", "mix", "--in", DataPath("stab_lb.csv")},
      {"rank", "--fn", "ua", "--phi", "0.5", "--in", DataPath("stab_lb.csv")},
      {"rank", "--fn", "mix", "--phi", "1.5", "--in", DataPath("stab_lb.csv")},
      {"rank", "--fn", "pl", "--in", DataPath("stab_lb.csv")},
      {"rank", "--fn", "ua", "--seed", "1", "--in", DataPath("stab_lb.csv")},
      {"rank", "--fn", "best", "--in", DataPath("stab_lb.csv")},
      {"rank", "--in", DataPath("stab_lb.csv")},
      {"rank", "--fn", "opt", "--values", "1,2", "--in", DataPath("stab_lb.csv")},
      {"stability", "--fn", "ua", "--in", DataPath("stab_lb.csv")},
      {"audit", "theorem", "--model", DataPath("twotype.json"), "--fn", "ua",
       "--n", "4", "--k", "5", "--group", "1", "--exact"},
      {"audit", "theorem", "--model", DataPath("twotype.json"), "--fn", "ua",
       "--n", "4", "--k", "1", "--group", "nope", "--exact"},
      {"audit", "theorem", "--model", DataPath("twotype.json"), "--fn", "pl",
       "--n", "4", "--k", "1", "--group", "1", "--exact"},
      {"audit", "multicalibration", "--model", DataPath("twotype.json"),
       "--delta", "0.3"},
      {"audit", "multicalibration", "--model", DataPath("twotype.json")},
      {"rank", "--unknown"},
      {},
  };
  for (const auto& args : cases) {
    Result r = Cli(args);
    EXPECT_EQ(r.code, kExitValidation) << ::testing::PrintToString(args);
    EXPECT_THAT(r.err, StartsWith("error[validation]: "))
        << ::testing::PrintToString(args);
    EXPECT_TRUE(r.out.empty());
  }
  Result sum = Cli({"rank", "--fn", "ua", "--in", bad});
  EXPECT_THAT(sum.err, HasSubstr("row 1 sums to 0.9"));
}

TEST(CliTest, IoErrors) {
  Result r = Cli({"rank", "--fn", "ua", "--in", "/nonexistent/p.csv"});
  EXPECT_EQ(r.code, kExitValidation);
  EXPECT_THAT(r.err, StartsWith("error[io]: "));
}

TEST(CliTest, BudgetRefusals) {
  std::string rows;
  for (int i = 0; i < 21; ++i) rows += "0.5,0.5\n";
  const std::string big = WriteTemp("big.csv", rows);
  const std::vector<std::vector<std::string>> cases = {
      {"oracle", "--in", big},
      {"oracle", "--fn", "pl", "--in", big},
      {"audit", "theorem", "--model", DataPath("twotype.json"), "--fn", "ua",
       "--n", "20", "--k", "1", "--group", "1", "--exact"},
      {"audit", "theorem", "--model", DataPath("twotype.json"), "--fn", "ua",
       "--n", "17", "--k", "1", "--group", "1", "--samples", "10", "--seed", "1"},
  };
  for (const auto& args : cases) {
    Result r = Cli(args);
    EXPECT_EQ(r.code, kExitBudget) << ::testing::PrintToString(args);
    EXPECT_THAT(r.err, StartsWith("error[budget]: "));
  }
}

TEST(CliTest, Help) {
  Result r = Cli({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_THAT(r.out, HasSubstr("rank"));
}

}  // namespace
}  // namespace uarank
