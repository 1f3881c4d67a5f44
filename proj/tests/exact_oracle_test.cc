// Copyright 2026 The limpsim Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "limpsim/exact_oracle.h"

#include <cmath>

#include <gtest/gtest.h>

#include "limpsim/error.h"
#include "limpsim/prob_model.h"

namespace limpsim {
namespace {

bool WithinOneUlp(double a, double b) {
  return a == b || std::nextafter(a, b) == b;
}

TEST(RationalTest, LowestTerms) {
  const Rational r(BigInt(6), BigInt(-8));
  EXPECT_EQ(r.numerator(), -3);
  EXPECT_EQ(r.denominator(), 4);
  EXPECT_EQ(Rational(BigInt(0), BigInt(-7)), Rational(0));
  EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
  EXPECT_EQ(Rational(2, 3) * Rational(9, 4), Rational(3, 2));
  EXPECT_EQ(Rational(3, 4).ToString(), "3/4");
  EXPECT_THROW(Rational(BigInt(1), BigInt(0)), Error);
}

TEST(ExactOracleTest, ReadExamples) {
  EXPECT_EQ(EnumReadProb(4), Rational(1, 4));
  EXPECT_EQ(EnumReadProb(3), Rational(1, 3));
  EXPECT_EQ(EnumReadProb(10), Rational(1, 10));
  EXPECT_EQ(EnumReadProb(10).ToDouble(), ReadDegradeProb({10}).value());
}

TEST(ExactOracleTest, WriteExamples) {
  EXPECT_EQ(EnumWriteProb(4), Rational(3, 4));
  EXPECT_EQ(EnumWriteProb(3), Rational(1));
  EXPECT_EQ(EnumWriteProb(12), Rational(1, 4));
  EXPECT_EQ(EnumWriteProb(12).ToDouble(), WriteDegradeProb({12}).value());
}

TEST(ExactOracleTest, SlowDestExamples) {
  EXPECT_EQ(EnumSlowDestProb(5), Rational(1, 3));
  EXPECT_EQ(EnumSlowDestProb(6), Rational(3, 4) * Rational(1, 3));
  EXPECT_EQ(EnumSlowDestProb(6), Rational(1, 4));
  // Beyond the enumeration budget the value is plain arithmetic.
  EXPECT_THROW(EnumSlowDestProb(102), Error);
  EXPECT_DOUBLE_EQ(SlowDestProb({102, 0}), 0.01);
}

TEST(ExactOracleTest, BudgetAndDomainErrors) {
  for (auto fn : {&EnumReadProb, &EnumWriteProb, &EnumSlowDestProb}) {
    try {
      fn(17);
      ADD_FAILURE() << "expected budget-exceeded";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kBudgetExceeded);
    }
  }
  EXPECT_THROW(EnumReadProb(2), Error);
  EXPECT_THROW(EnumWriteProb(2), Error);
  EXPECT_THROW(EnumSlowDestProb(4), Error);
}

TEST(ExactOracleTest, MatchesClosedFormsOverBudget) {
  for (std::int64_t n = 3; n <= kMaxEnumerationNodes; ++n) {
    EXPECT_EQ(EnumReadProb(n), Rational(1, n));
    EXPECT_EQ(EnumWriteProb(n), Rational(3, n));
    EXPECT_TRUE(WithinOneUlp(EnumReadProb(n).ToDouble(), ReadDegradeProb({n})));
    EXPECT_TRUE(WithinOneUlp(EnumWriteProb(n).ToDouble(), WriteDegradeProb({n})));
  }
  for (std::int64_t n = 5; n <= kMaxEnumerationNodes; ++n) {
    EXPECT_EQ(EnumSlowDestProb(n), Rational(1, n - 2));
    EXPECT_TRUE(WithinOneUlp(EnumSlowDestProb(n).ToDouble(), SlowDestProb({n, 0})));
  }
}

}  // namespace
}  // namespace limpsim
