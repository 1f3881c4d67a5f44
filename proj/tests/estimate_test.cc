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

#include "limpsim/estimate.h"

#include <gtest/gtest.h>

#include "limpsim/error.h"

namespace limpsim {
namespace {

// Reference bounds from statsmodels' proportion_confint(method="wilson").
TEST(WilsonIntervalTest, MatchesReferenceValues) {
  struct Case {
    std::uint64_t successes, observations;
    double low, high;
  };
  for (const Case& c : {Case{0, 10, 0.0, 0.27753279986288926},
                        Case{5, 10, 0.23659309051256394, 0.7634069094874361},
                        Case{10, 10, 0.7224672001371106, 1.0},
                        Case{30, 1000, 0.021093738828834696, 0.042503414147587126}}) {
    const Interval ci = WilsonInterval(c.successes, c.observations);
    EXPECT_NEAR(ci.low, c.low, 1e-12);
    EXPECT_NEAR(ci.high, c.high, 1e-12);
  }
}

TEST(WilsonIntervalTest, EdgeCases) {
  const Interval empty = WilsonInterval(0, 0);
  EXPECT_EQ(empty.low, 0.0);
  EXPECT_EQ(empty.high, 1.0);
  EXPECT_THROW(WilsonInterval(3, 2), Error);
}

TEST(WilsonIntervalTest, ShrinksWithObservations) {
  double last_width = 1.0;
  for (std::uint64_t n : {10, 100, 1000, 10000, 100000}) {
    const Interval ci = WilsonInterval(n / 4, n);
    EXPECT_LT(ci.high - ci.low, last_width);
    last_width = ci.high - ci.low;
  }
}

TEST(SummarizeTest, BracketsPointEstimate) {
  for (std::uint64_t s : {0, 1, 50, 99, 100}) {
    const EstimateSummary e = Summarize("m", 100, s, 100, 9);
    EXPECT_LE(e.ci_low, e.point_estimate.value());
    EXPECT_GE(e.ci_high, e.point_estimate.value());
    EXPECT_EQ(e.master_seed, 9u);
    EXPECT_EQ(e.metric, "m");
  }
  EXPECT_EQ(Summarize("m", 5, 0, 0, 1).point_estimate, 0.0);
}

}  // namespace
}  // namespace limpsim
