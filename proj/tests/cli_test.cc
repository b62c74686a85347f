// Copyright 2026 The plbr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "plbr/io.h"

namespace plbr::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result RunCli(std::vector<std::string> args) {
  args.insert(args.begin(), "plbr");
  std::ostringstream out;
  std::ostringstream err;
  const int code = Run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string TempPath(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

TEST(FormatDecimalTest, SignificantDigitsWithoutTrailingZeros) {
  EXPECT_EQ(FormatDecimal(Rational(1, 2), 12), "0.5");
  EXPECT_EQ(FormatDecimal(Rational(1, 20), 12), "0.05");
  EXPECT_EQ(FormatDecimal(Rational(0), 12), "0");
  EXPECT_EQ(FormatDecimal(Rational(-2, 3), 4), "-0.6667");
  EXPECT_EQ(FormatDecimal(Rational(123456), 3), "1.23e5");
  EXPECT_EQ(FormatDecimal(Rational(999, 1000), 2), "1");
  EXPECT_EQ(FormatDecimal(Rational(25), 12), "25");
  EXPECT_EQ(FormatDecimal(Rational(1, 3), 30), "0.333333333333333333333333333333");
  EXPECT_EQ(FormatDecimal(Rational(1, 10000000), 3), "1e-7");
}

TEST(CliTest, ListPrintsRegistry) {
  const Result r = RunCli({"list"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("fpsb\n"), std::string::npos);
  EXPECT_NE(r.out.find("bargaining\n"), std::string::npos);
}

TEST(CliTest, SolveReportsExactFixedPoint) {
  const Result r = RunCli({"solve", "fpsb", "--seed", "truthful"});
  EXPECT_EQ(r.code, kOk) << r.err;
  EXPECT_NE(r.out.find("outcome: fixed-point (exact) after 2 rounds"), std::string::npos)
      << r.out;
  EXPECT_NE(r.out.find("a(t) = 1/2 t on (0, 1]"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("m = <0, 1/2, 0>"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("epsilon: 0 (0)"), std::string::npos) << r.out;
}

TEST(CliTest, SolveExhaustedExitsWithThree) {
  const Result r = RunCli({"solve", "fpsb", "--seed", "linear:1,1/2", "--max-iters", "1"});
  EXPECT_EQ(r.code, kExhausted);
  EXPECT_NE(r.out.find("outcome: exhausted"), std::string::npos);
}

TEST(CliTest, AsymmetricSolveForBargaining) {
  const Result r = RunCli({"solve", "bargaining", "--param", "k=1/2"});
  EXPECT_EQ(r.code, kOk) << r.err;
  EXPECT_NE(r.out.find("solve (asymmetric)"), std::string::npos);
  EXPECT_NE(r.out.find("player 1:"), std::string::npos);
}

TEST(CliTest, VerifyPrintsEpsilonPerPlayer) {
  const Result r = RunCli({"verify", "fpsb", "--profile", "truthful"});
  EXPECT_EQ(r.code, kOk) << r.err;
  EXPECT_NE(r.out.find("epsilon[player 0]: 1/4 (0.25)"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("epsilon: 1/4"), std::string::npos);
}

TEST(CliTest, BestResponseWritesStrategyFileUsableAsSeed) {
  const std::string path = TempPath("plbr_cli_test_br.json");
  Result r = RunCli({"best-response", "fpsb", "--seed", "truthful", "--out", path});
  ASSERT_EQ(r.code, kOk) << r.err;
  const Strategy s = LoadStrategyFile(path);
  EXPECT_EQ(s(Rational(1, 2)), Rational(1, 4));
  r = RunCli({"verify", "fpsb", "--profile", path});
  EXPECT_EQ(r.code, kOk) << r.err;
  EXPECT_NE(r.out.find("epsilon: 0 (0)"), std::string::npos) << r.out;
  std::filesystem::remove(path);
}

TEST(CliTest, ExportPlotWritesCsv) {
  const Result r = RunCli({"export-plot", "fpsb", "--best-response", "--grid", "4"});
  EXPECT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(r.out, "t,action\n0,0\n0.25,0.125\n0.5,0.25\n0.75,0.375\n1,0.5\n");
}

TEST(CliTest, ExportPlotWithMonteCarloColumns) {
  const Result r = RunCli({"export-plot", "fpsb", "--best-response", "--grid", "2", "--mc",
                           "--mc-samples", "2000"});
  EXPECT_EQ(r.code, kOk) << r.err;
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "t,action,mc_action,mc_stderr");
  int rows = 0;
  while (std::getline(lines, line)) ++rows;
  EXPECT_EQ(rows, 3);
}

TEST(CliTest, GameSpecFileIsAccepted) {
  const std::string path = TempPath("plbr_cli_test_game.json");
  {
    std::ofstream f(path);
    f << R"({"registry": "shared_good", "parameters": {"A": 1, "B": 3}})";
  }
  const Result r = RunCli({"best-response", path, "--seed", "truthful"});
  EXPECT_EQ(r.code, kOk) << r.err;
  EXPECT_NE(r.out.find("a(t) = 2/3 t + 1/3 on (1, 3]"), std::string::npos) << r.out;
  std::filesystem::remove(path);
}

TEST(CliTest, ErrorsMapToExitCodes) {
  EXPECT_EQ(RunCli({}).code, kUsage);
  EXPECT_EQ(RunCli({"frobnicate"}).code, kUsage);
  EXPECT_EQ(RunCli({"solve", "fpsb", "--tol", "abc"}).code, kUsage);
  EXPECT_EQ(RunCli({"solve", "fpsb", "--param", "k"}).code, kUsage);
  EXPECT_EQ(RunCli({"solve", "no_such_game"}).code, kBadSpec);
  EXPECT_EQ(RunCli({"solve", "fpsb", "--seed", "bogus"}).code, kBadSpec);
  EXPECT_EQ(RunCli({"verify", "fpsb", "--profile", "vicious-vickrey"}).code, kBadSpec);
  EXPECT_EQ(RunCli({"--help"}).code, kOk);
}

}  // namespace
}  // namespace plbr::cli
