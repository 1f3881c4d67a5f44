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

#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "limpsim/probability.h"

namespace limpsim {

inline constexpr double kWilsonZ95 = 1.959963984540054;

struct Interval {
  double low = 0.0;
  double high = 1.0;
};

// Wilson score interval for `successes` out of `observations`. With zero
// observations the interval is the whole unit interval.
Interval WilsonInterval(std::uint64_t successes, std::uint64_t observations,
                        double z = kWilsonZ95);

// Monte Carlo estimate of one metric.
//
// `observations` is the Bernoulli denominator behind the point estimate; it
// equals `trials` for per-trial events and is larger for per-node or
// per-block frequencies.
struct EstimateSummary {
  std::string metric;
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  std::uint64_t observations = 0;
  Probability point_estimate;
  double ci_low = 0.0;
  double ci_high = 1.0;
  std::uint64_t master_seed = 0;

  friend bool operator==(const EstimateSummary&, const EstimateSummary&) = default;
};

EstimateSummary Summarize(std::string metric, std::uint64_t trials,
                          std::uint64_t successes, std::uint64_t observations,
                          std::uint64_t master_seed);

using EstimateMap = std::map<std::string, EstimateSummary>;

}  // namespace limpsim
