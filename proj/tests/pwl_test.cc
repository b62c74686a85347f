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

#include "plbr/pwl.h"

#include <gtest/gtest.h>

#include <stdexcept>
#include <vector>

namespace plbr {
namespace {

Strategy Step() {
  // 0 up to 1/2, then t.
  return Strategy({Rational(1, 2)}, {{0, 0}, {1, 0}});
}

TEST(LinearFuncTest, FormatsReadably) {
  EXPECT_EQ(ToString(LinearFunc{Rational(1, 2), 0}), "1/2 t");
  EXPECT_EQ(ToString(LinearFunc{1, Rational(-1, 4)}), "t - 1/4");
  EXPECT_EQ(ToString(LinearFunc{-1, 2}), "-t + 2");
  EXPECT_EQ(ToString(LinearFunc{0, Rational(3, 4)}), "3/4");
}

TEST(LinearFuncTest, Intersection) {
  EXPECT_EQ(*Intersection({1, 0}, {-1, 1}), Rational(1, 2));
  EXPECT_FALSE(Intersection({2, 0}, {2, 1}).has_value());
}

TEST(StrategyTest, RejectsInconsistentShapes) {
  EXPECT_THROW(Strategy({1}, {{0, 0}}), std::invalid_argument);
  EXPECT_THROW(Strategy({1, 1}, {{0, 0}, {0, 1}, {0, 2}}), std::invalid_argument);
  EXPECT_THROW(Strategy({2, 1}, {{0, 0}, {0, 1}, {0, 2}}), std::invalid_argument);
}

TEST(StrategyTest, IsLeftContinuousAtBoundaries) {
  const Strategy s = Step();
  EXPECT_EQ(s(Rational(1, 2)), Rational(0));
  EXPECT_EQ(s.RightLimit(Rational(1, 2)), Rational(1, 2));
  EXPECT_EQ(s(Rational(3, 4)), Rational(3, 4));
  EXPECT_EQ(s(Rational(-5)), Rational(0));
  EXPECT_EQ(s.PieceAt(Rational(1, 2)), 0u);
  EXPECT_EQ(s.PieceRightOf(Rational(1, 2)), 1u);
}

TEST(StrategyTest, RefineKeepsValuesAndSimplifyUndoesIt) {
  const Strategy s = Step();
  const std::vector<Rational> extra{Rational(1, 4), Rational(3, 4), Rational(1, 2)};
  const Strategy r = Refine(s, extra);
  EXPECT_EQ(r.boundaries().size(), 3u);
  for (int i = -4; i <= 8; ++i) {
    const Rational t(i, 4);
    EXPECT_EQ(r(t), s(t));
    EXPECT_EQ(r.RightLimit(t), s.RightLimit(t));
  }
  EXPECT_EQ(Simplify(r), s);
}

TEST(StrategyTest, SupDistanceIsExact) {
  const Strategy a = Strategy::Identity();
  const Strategy b = Strategy::Linear(Rational(1, 2), 0);
  EXPECT_EQ(SupDistance(a, b, 0, 1), Rational(1, 2));
  EXPECT_EQ(SupDistance(a, a, 0, 1), Rational(0));
  // A jump right at the left end only counts through the right limit.
  EXPECT_EQ(SupDistance(Step(), Strategy::Constant(0), Rational(1, 2), 1),
            Rational(1));
  EXPECT_EQ(SupDistance(Step(), Strategy::Identity(), Rational(1, 2), 1),
            Rational(0));
  EXPECT_THROW(SupDistance(a, b, 1, 1), std::invalid_argument);
}

TEST(StrategyTest, ZeroExtendPutsZeroOutsideSupport) {
  const Strategy s = ZeroExtend(Strategy::Linear(1, 1), 0, 2);
  EXPECT_EQ(s.boundaries(), (std::vector<Rational>{0, 2}));
  EXPECT_EQ(s(Rational(-1)), Rational(0));
  EXPECT_EQ(s(Rational(0)), Rational(0));
  EXPECT_EQ(s.RightLimit(Rational(0)), Rational(1));
  EXPECT_EQ(s(Rational(2)), Rational(3));
  EXPECT_EQ(s(Rational(3)), Rational(0));
}

TEST(StrategyTest, InteriorBoundaryCountIgnoresRedundantCuts) {
  const std::vector<Rational> extra{Rational(1, 3)};
  const Strategy s = Refine(Step(), extra);
  EXPECT_EQ(InteriorBoundaryCount(s, 0, 1), 1u);
  EXPECT_EQ(InteriorBoundaryCount(s, Rational(1, 2), 1), 0u);
}

TEST(StrategyTest, ClampActions) {
  const Strategy s = ClampActions(Strategy::Identity(), Rational(1, 4), Rational(3, 4));
  EXPECT_EQ(s(Rational(0)), Rational(1, 4));
  EXPECT_EQ(s(Rational(1, 2)), Rational(1, 2));
  EXPECT_EQ(s(Rational(1)), Rational(3, 4));
}

TEST(EnvelopeTest, PicksBestLinePerType) {
  // Score -(a - t)^2 prefers the candidate closest to t.
  const std::vector<LinearFunc> lines{{0, 0}, {0, 1}};
  const ScoreFn score = [](const Rational& t, const Rational& a) {
    return -(a - t) * (a - t);
  };
  EnvelopeOptions opts;
  opts.score_degree = 2;
  const Strategy s = Simplify(SelectEnvelope(lines, score, 0, 1, opts));
  EXPECT_EQ(s(Rational(1, 4)), Rational(0));
  EXPECT_EQ(s(Rational(3, 4)), Rational(1));
  // Tie at exactly 1/2 goes to the lower rank (first candidate).
  EXPECT_EQ(s(Rational(1, 2)), Rational(0));
  EXPECT_EQ(InteriorBoundaryCount(s, 0, 1), 1u);
}

TEST(EnvelopeTest, FindsSwitchBetweenNonCrossingLines) {
  // Parallel lines never intersect, yet the better one changes at t = 1/2.
  const std::vector<LinearFunc> lines{{1, 0}, {1, 1}};
  const ScoreFn score = [](const Rational& t, const Rational& a) {
    return a * (Rational(1, 2) - t);
  };
  EnvelopeOptions opts;
  opts.score_degree = 2;
  const Strategy s = Simplify(SelectEnvelope(lines, score, 0, 1, opts));
  EXPECT_EQ(s(Rational(1, 4)), Rational(5, 4));
  EXPECT_EQ(s(Rational(3, 4)), Rational(3, 4));
  ASSERT_EQ(InteriorBoundaryCount(s, 0, 1), 1u);
}

TEST(EnvelopeTest, BracketsIrrationalSwitchPoints) {
  // Candidate a = 1 beats a = 0 where t^2 > 1/2, i.e. beyond sqrt(1/2).
  const std::vector<LinearFunc> lines{{0, 0}, {0, 1}};
  const ScoreFn score = [](const Rational& t, const Rational& a) {
    return a * (t * t - Rational(1, 2));
  };
  EnvelopeOptions opts;
  opts.score_degree = 2;
  const Strategy s = Simplify(SelectEnvelope(lines, score, 0, 1, opts));
  ASSERT_EQ(s.boundaries().size(), 1u);
  const double c = s.boundaries()[0].ToDouble();
  EXPECT_NEAR(c, 0.70710678118654752, 1e-15);
}

}  // namespace
}  // namespace plbr
