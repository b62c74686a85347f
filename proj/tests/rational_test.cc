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

#include "plbr/rational.h"

#include <gtest/gtest.h>

#include <stdexcept>

namespace plbr {
namespace {

TEST(RationalTest, ParsesFractionsIntegersAndDecimals) {
  EXPECT_EQ(Rational::Parse("3/6"), Rational(1, 2));
  EXPECT_EQ(Rational::Parse("-7"), Rational(-7));
  EXPECT_EQ(Rational::Parse("-0.125"), Rational(-1, 8));
  EXPECT_EQ(Rational::Parse("1.5e-3"), Rational(3, 2000));
  EXPECT_EQ(Rational::Parse("2E2"), Rational(200));
}

TEST(RationalTest, RejectsMalformedText) {
  EXPECT_THROW(Rational::Parse(""), std::invalid_argument);
  EXPECT_THROW(Rational::Parse("1/0"), std::invalid_argument);
  EXPECT_THROW(Rational::Parse("abc"), std::invalid_argument);
  EXPECT_THROW(Rational::Parse("1/2/3"), std::invalid_argument);
}

TEST(RationalTest, ArithmeticIsExactAndCanonical) {
  const Rational third(1, 3);
  EXPECT_EQ(third + third + third, Rational(1));
  EXPECT_EQ(Rational(2, 4).ToString(), "1/2");
  EXPECT_EQ(Rational(4, 2).ToString(), "2");
  EXPECT_EQ((Rational(1, 3) * Rational(-3, 5)).ToString(), "-1/5");
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_EQ(Min(Rational(1), Rational(2)), Rational(1));
  EXPECT_EQ(Clamp(0, 1, Rational(3, 2)), Rational(1));
}

TEST(RationalTest, FromDoubleIsExact) {
  EXPECT_EQ(Rational::FromDouble(0.375), Rational(3, 8));
  EXPECT_EQ(Rational::FromDouble(0.1).ToDouble(), 0.1);
  EXPECT_NE(Rational::FromDouble(0.1), Rational(1, 10));
}

TEST(RationalTest, SquareRoots) {
  Rational root;
  EXPECT_TRUE(ExactSqrt(Rational(9, 16), &root));
  EXPECT_EQ(root, Rational(3, 4));
  EXPECT_FALSE(ExactSqrt(Rational(2), &root));

  const Rational r = ApproxSqrt(Rational(5), 50);
  const Rational err = (r * r - 5).Abs();
  EXPECT_LT(err, Rational::Parse("1e-48"));
}

TEST(RationalTest, SimplestBetweenPicksSmallDenominator) {
  EXPECT_EQ(SimplestBetween(Rational(3, 10), Rational(2, 5)), Rational(1, 3));
  EXPECT_EQ(SimplestBetween(Rational(1, 10), Rational(9, 10)), Rational(1, 2));
  const Rational x = SimplestBetween(Rational(-7, 5), Rational(-13, 10));
  EXPECT_LE(Rational(-7, 5), x);
  EXPECT_LE(x, Rational(-13, 10));
}

TEST(RationalTest, DecimalRendering) {
  EXPECT_EQ(Rational(1, 2).ToDecimal(), "0.5");
  EXPECT_EQ(Rational(-1, 3).ToDecimal(4), "-0.3333");
}

}  // namespace
}  // namespace plbr
