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

#include "limpsim/random.h"

#include <algorithm>
#include <cmath>
#include <limits>

namespace limpsim {

std::uint64_t UniformBelow(Engine& engine, std::uint64_t bound) {
  // Reject the top partial bucket so every residue is equally likely.
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t draw = engine();
  while (draw >= limit) draw = engine();
  return draw % bound;
}

double UniformUnit(Engine& engine) {
  return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

bool Bernoulli(Engine& engine, double p) {
  return UniformUnit(engine) < p;
}

std::uint64_t GeometricFailures(Engine& engine, double p) {
  // 1 - U lies in (0, 1], so the log is finite.
  const double u = 1.0 - UniformUnit(engine);
  const double failures = std::floor(std::log(u) / std::log1p(-p));
  if (failures >= 0x1.0p62) return std::uint64_t{1} << 62;
  return static_cast<std::uint64_t>(failures);
}

std::array<std::int32_t, 3> SampleTriple(Engine& engine, std::int32_t n) {
  std::array<std::int32_t, 3> picked{};
  int count = 0;
  for (std::int32_t j = n - 3; j < n; ++j) {
    const auto t = static_cast<std::int32_t>(UniformBelow(engine, static_cast<std::uint64_t>(j) + 1));
    const bool seen = std::find(picked.begin(), picked.begin() + count, t) != picked.begin() + count;
    picked[count++] = seen ? j : t;
  }
  std::sort(picked.begin(), picked.end());
  return picked;
}

}  // namespace limpsim
