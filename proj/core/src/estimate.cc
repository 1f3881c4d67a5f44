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

#include <algorithm>
#include <cmath>
#include <utility>

#include "limpsim/error.h"

namespace limpsim {

Interval WilsonInterval(std::uint64_t successes, std::uint64_t observations, double z) {
  if (successes > observations) ThrowInvalidParams("more successes than observations");
  if (observations == 0) return {};
  const auto n = static_cast<double>(observations);
  const double phat = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (phat + z2 / (2.0 * n)) / denom;
  const double half = z / denom * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n));
  Interval interval{std::max(0.0, center - half), std::min(1.0, center + half)};
  // Rounding at phat in {0, 1} can push a bound a few ulps past the estimate.
  interval.low = std::min(interval.low, phat);
  interval.high = std::max(interval.high, phat);
  return interval;
}

EstimateSummary Summarize(std::string metric, std::uint64_t trials,
                          std::uint64_t successes, std::uint64_t observations,
                          std::uint64_t master_seed) {
  EstimateSummary summary;
  summary.metric = std::move(metric);
  summary.trials = trials;
  summary.successes = successes;
  summary.observations = observations;
  summary.point_estimate =
      observations == 0
          ? Probability::Zero()
          : Probability(static_cast<double>(successes) / static_cast<double>(observations));
  const Interval ci = WilsonInterval(successes, observations);
  summary.ci_low = ci.low;
  summary.ci_high = ci.high;
  summary.master_seed = master_seed;
  return summary;
}

}  // namespace limpsim
