//
// Copyright 2026 The LadderLab Authors
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
//

#include "ladderlab/rational.h"

#include <cstdint>
#include <random>

#include "absl/status/status.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"

namespace ladderlab {
namespace {

Rational R(int64_t p, int64_t q) { return Rational(p, q); }

Precision Eta(int64_t d) { return *Precision::FromDenominator(d); }

TEST(RationalTest, NormalizesSignAndGcd) {
  EXPECT_EQ(R(2, 4), R(1, 2));
  EXPECT_EQ(R(3, -6).numerator(), -1);
  EXPECT_EQ(R(3, -6).denominator(), 2);
  EXPECT_EQ(R(0, 7), Rational::Integer(0));
}

TEST(RationalTest, OrderingAndArithmetic) {
  EXPECT_LT(R(1, 3), R(1, 2));
  EXPECT_GT(R(2, 3), R(1, 2));
  EXPECT_EQ(R(1, 3) + R(1, 6), R(1, 2));
  EXPECT_EQ(R(1, 2) - R(3, 4), R(-1, 4));
  EXPECT_EQ(-R(1, 2), R(-1, 2));
}

TEST(RationalTest, ZeroDenominatorThrows) {
  EXPECT_THROW(R(1, 0), std::invalid_argument);
}

TEST(ParseDecimalTest, ParsesExactly) {
  EXPECT_EQ(*ParseDecimal("0.644"), R(644, 1000));
  EXPECT_EQ(*ParseDecimal("1"), Rational::Integer(1));
  EXPECT_EQ(*ParseDecimal(".5"), R(1, 2));
  EXPECT_EQ(*ParseDecimal("0.010"), R(1, 100));
}

TEST(ParseDecimalTest, RejectsMalformedInput) {
  for (const char* text : {"", ".", "1.2.3", "-0.5", "abc", "1e-3"}) {
    EXPECT_EQ(ParseDecimal(text).status().code(),
              absl::StatusCode::kInvalidArgument)
        << text;
  }
}

TEST(FormatDecimalTest, TerminatingDecimalsAreExact) {
  EXPECT_EQ(FormatDecimal(R(1, 2)), "0.5");
  EXPECT_EQ(FormatDecimal(R(64, 100)), "0.64");
  EXPECT_EQ(FormatDecimal(R(517, 1000)), "0.517");
  EXPECT_EQ(FormatDecimal(Rational::Integer(1)), "1");
  EXPECT_EQ(FormatDecimal(Rational::Integer(0)), "0");
  EXPECT_EQ(FormatDecimal(R(1, 20000)), "0.00005");
}

TEST(FormatDecimalTest, NonTerminatingUsesShortestRoundTrip) {
  EXPECT_EQ(FormatDecimal(R(1, 3)), "0.3333333333333333");
  EXPECT_EQ(FormatDecimal(R(2, 3)), "0.6666666666666666");
}

TEST(FormatDecimalTest, RoundTripsThroughParse) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const int64_t d = 1 + static_cast<int64_t>(rng() % 20000);
    const int64_t c = static_cast<int64_t>(rng() % (d + 1));
    Rational x(c, d);
    if (!IsMultipleOf(x, Eta(1000000000))) continue;
    EXPECT_EQ(*ParseDecimal(FormatDecimal(x)), x);
  }
}

TEST(PrecisionTest, DefaultIsOne) {
  EXPECT_EQ(Precision().denominator(), 1);
  EXPECT_EQ(Precision().value(), Rational::Integer(1));
}

TEST(PrecisionTest, ParsesReciprocalsOnly) {
  EXPECT_EQ(Precision::Parse("0.01")->denominator(), 100);
  EXPECT_EQ(Precision::Parse("0.5")->denominator(), 2);
  EXPECT_EQ(Precision::Parse("1")->denominator(), 1);
  EXPECT_FALSE(Precision::Parse("0.3").ok());
  EXPECT_FALSE(Precision::Parse("0").ok());
  EXPECT_FALSE(Precision::Parse("2").ok());
  EXPECT_FALSE(Precision::FromDenominator(0).ok());
}

TEST(RoundingTest, WorkedExamples) {
  EXPECT_EQ(RoundNearest(R(644, 1000), Eta(100)), R(64, 100));
  EXPECT_EQ(RoundNearest(R(636, 1000), Eta(100)), R(64, 100));
  EXPECT_EQ(RoundNearest(R(645, 1000), Eta(100)), R(65, 100));
  EXPECT_EQ(RoundNearest(R(3, 10)), Rational::Integer(0));
  EXPECT_EQ(RoundDown(R(644, 1000), Eta(100)), R(64, 100));
  EXPECT_EQ(RoundUp(R(644, 1000), Eta(100)), R(65, 100));
}

TEST(RoundingTest, TiesRoundAwayFromZero) {
  EXPECT_EQ(RoundNearest(R(1, 2)), Rational::Integer(1));
  EXPECT_EQ(RoundNearest(R(-1, 2)), Rational::Integer(-1));
  EXPECT_EQ(RoundNearest(R(5, 1000), Eta(100)), R(1, 100));
}

TEST(RoundingTest, MultiplesAreFixedPoints) {
  for (int64_t c = 0; c <= 100; ++c) {
    const Rational x(c, 100);
    EXPECT_EQ(RoundNearest(x, Eta(100)), x);
    EXPECT_EQ(RoundDown(x, Eta(100)), x);
    EXPECT_EQ(RoundUp(x, Eta(100)), x);
  }
}

// Reference rounding by scanning every multiple of 1/d in [0, 1].
Rational ScanNearest(const Rational& x, int64_t d) {
  Rational best(0, 1);
  Rational best_gap = x;
  for (int64_t j = 0; j <= d; ++j) {
    const Rational m(j, d);
    Rational gap = x - m;
    if (gap < Rational::Integer(0)) gap = -gap;
    if (gap < best_gap || (gap == best_gap && m > best)) {
      best = m;
      best_gap = gap;
    }
  }
  return best;
}

TEST(RoundingTest, MatchesScanOracleOnFuzzedInputs) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 3000; ++i) {
    const int64_t n = 1 + static_cast<int64_t>(rng() % 2000);
    const int64_t c = static_cast<int64_t>(rng() % (n + 1));
    const int64_t d = 1 + static_cast<int64_t>(rng() % 60);
    const Rational x(c, n);
    EXPECT_EQ(RoundNearest(x, Eta(d)), ScanNearest(x, d))
        << c << "/" << n << " at 1/" << d;
  }
}

TEST(RoundingTest, OrderingBoundsAndMonotonicity) {
  std::mt19937_64 rng(13);
  const Rational zero = Rational::Integer(0);
  for (int i = 0; i < 20000; ++i) {
    const int64_t n = 1 + static_cast<int64_t>(rng() % 5000);
    const int64_t c = static_cast<int64_t>(rng() % (n + 1));
    const int64_t c2 =
        std::min<int64_t>(n, c + static_cast<int64_t>(rng() % 5));
    const int64_t d = 1 + static_cast<int64_t>(rng() % 1000);
    const Precision eta = Eta(d);
    const Rational x(c, n);
    const Rational y(c2, n);
    const Rational near = RoundNearest(x, eta);
    const Rational down = RoundDown(x, eta);
    const Rational up = RoundUp(x, eta);
    Rational gap = near - x;
    if (gap < zero) gap = -gap;
    ASSERT_LE(gap + gap, eta.value());
    ASSERT_LE(down, near);
    ASSERT_LE(near, up);
    ASSERT_LE(down, x);
    ASSERT_GE(up, x);
    ASSERT_TRUE(IsMultipleOf(near, eta));
    ASSERT_EQ(RoundNearest(near, eta), near);
    ASSERT_EQ(RoundDown(down, eta), down);
    ASSERT_EQ(RoundUp(up, eta), up);
    ASSERT_LE(near, RoundNearest(y, eta));
    ASSERT_LE(down, RoundDown(y, eta));
    ASSERT_LE(up, RoundUp(y, eta));
  }
}

TEST(RoundingTest, IsMultipleOf) {
  EXPECT_TRUE(IsMultipleOf(R(3, 10), Eta(100)));
  EXPECT_FALSE(IsMultipleOf(R(1, 3), Eta(100)));
  EXPECT_TRUE(IsMultipleOf(Rational::Integer(1), Eta(7)));
}

}  // namespace
}  // namespace ladderlab
