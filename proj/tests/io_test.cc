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

#include "plbr/io.h"

#include <gtest/gtest.h>

#include <filesystem>

namespace plbr {
namespace {

TEST(StrategyIoTest, RoundTripIsExact) {
  const Strategy s({Rational(1, 3), Rational(2, 3)},
                   {{0, 0}, {Rational(-7, 11), Rational(1, 99)}, {1, Rational(5, 2)}});
  EXPECT_EQ(ParseStrategy(StrategyToJson(s)), s);
}

TEST(StrategyIoTest, AcceptsNumbersAndObjects) {
  const Strategy s = ParseStrategy(
      R"({"boundaries": [0.5], "pieces": [[0, 0], {"slope": "1", "intercept": -0.25}]})");
  EXPECT_EQ(s(Rational(1)), Rational(3, 4));
  EXPECT_EQ(s(Rational(1, 2)), Rational(0));
}

TEST(StrategyIoTest, MalformedInputIsSpecError) {
  EXPECT_THROW(ParseStrategy("{"), SpecError);
  EXPECT_THROW(ParseStrategy(R"({"boundaries": []})"), SpecError);
  EXPECT_THROW(ParseStrategy(R"({"boundaries": [1], "pieces": [[0, 0]]})"), SpecError);
  EXPECT_THROW(ParseStrategy(R"({"pieces": [["x", 0]]})"), SpecError);
  EXPECT_THROW(ParseStrategy(R"({"pieces": [[0]]})"), SpecError);
}

TEST(StrategyIoTest, FileRoundTrip) {
  const auto path = std::filesystem::temp_directory_path() / "plbr_io_test_strategy.json";
  const Strategy s = Strategy::Linear(Rational(2, 3), Rational(1, 4));
  SaveStrategyFile(path.string(), s);
  EXPECT_EQ(LoadStrategyFile(path.string()), s);
  std::filesystem::remove(path);
  EXPECT_THROW(LoadStrategyFile(path.string()), SpecError);
}

TEST(GameIoTest, RegistryGamesRoundTrip) {
  for (const std::string& name : RegistryNames()) {
    const GameDefinition g = Registry(name);
    const GameDefinition back = ParseGame(GameToJson(g));
    EXPECT_EQ(back.name, g.name);
    EXPECT_EQ(back.symmetric, g.symmetric);
    EXPECT_EQ(back.payoffs, g.payoffs) << name;
    EXPECT_EQ(back.dists, g.dists) << name;
    EXPECT_EQ(back.parameters, g.parameters) << name;
  }
}

TEST(GameIoTest, RegistryReferenceWithClip) {
  const GameDefinition g = ParseGame(
      R"({"registry": "bargaining", "parameters": {"k": "1/4"}, "action_clip": [0, 1]})");
  EXPECT_EQ(g.parameters.at("k"), Rational(1, 4));
  EXPECT_EQ(g.payoffs, Registry("bargaining", {{"k", Rational(1, 4)}}).payoffs);
  ASSERT_TRUE(g.action_clip.has_value());
  EXPECT_EQ(g.action_clip->second, Rational(1));
}

TEST(GameIoTest, ExplicitSymmetricGame) {
  const GameDefinition g = ParseGame(R"({
    "name": "mini", "alpha": -1, "region_bounds": [0, 0],
    "regions": [[0,0,0,0,0], ["1/2","-1/2",0,0,0], [1,-1,0,0,0]],
    "distribution": {"breakpoints": [0, 1, 2], "masses": ["1/2", "1/2"]}})");
  EXPECT_EQ(g.name, "mini");
  EXPECT_TRUE(g.symmetric);
  EXPECT_EQ(g.payoffs, Registry("fpsb").payoffs);
  EXPECT_EQ(g.dist(1).hi(), Rational(2));
}

TEST(GameIoTest, MalformedGamesAreSpecErrors) {
  EXPECT_THROW(ParseGame("[]"), SpecError);
  EXPECT_THROW(ParseGame(R"({"alpha": 1, "regions": [[0,0,0,0]]})"), SpecError);
  EXPECT_THROW(ParseGame(R"({"alpha": 1, "region_bounds": [0], "regions": [[0,0,0,0,0]]})"),
               SpecError);
  EXPECT_THROW(ParseGame(R"({"registry": "nope"})"), SpecError);
  EXPECT_THROW(ParseGame(R"({"alpha": 1, "regions": [[0,0,0,0,0]],
                             "distribution": {"breakpoints": [0, 1], "masses": ["1/2"]}})"),
               SpecError);
  EXPECT_THROW(ParseGame(R"({"players": [{"alpha": 1, "regions": [[0,0,0,0,0]]}]})"),
               SpecError);
  EXPECT_THROW(LoadGameFile("/nonexistent/game.json"), SpecError);
}

}  // namespace
}  // namespace plbr
