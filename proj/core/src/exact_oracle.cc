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

#include <array>
#include <string>

#include "limpsim/error.h"

namespace limpsim {

namespace {

constexpr std::int64_t kSlow = 0;

void CheckBudget(std::int64_t nodes, std::int64_t minimum) {
  if (nodes < minimum) {
    ThrowInvalidParams("enumeration needs at least " + std::to_string(minimum) +
                       " nodes, got n=" + std::to_string(nodes));
  }
  if (nodes > kMaxEnumerationNodes) {
    throw Error(ErrorCode::kBudgetExceeded,
                "enumeration limited to n <= " + std::to_string(kMaxEnumerationNodes) +
                    ", got n=" + std::to_string(nodes));
  }
}

template <typename Visit>
void ForEachTriple(std::int64_t nodes, Visit&& visit) {
  for (std::int64_t a = 0; a < nodes; ++a) {
    for (std::int64_t b = a + 1; b < nodes; ++b) {
      for (std::int64_t c = b + 1; c < nodes; ++c) {
        visit(std::array<std::int64_t, 3>{a, b, c});
      }
    }
  }
}

}  // namespace

Rational EnumReadProb(std::int64_t nodes) {
  CheckBudget(nodes, 3);
  std::int64_t hits = 0;
  std::int64_t outcomes = 0;
  ForEachTriple(nodes, [&](const std::array<std::int64_t, 3>& replicas) {
    for (std::int64_t chosen : replicas) {
      ++outcomes;
      if (chosen == kSlow) ++hits;
    }
  });
  return Rational(hits, outcomes);
}

Rational EnumWriteProb(std::int64_t nodes) {
  CheckBudget(nodes, 3);
  std::int64_t hits = 0;
  std::int64_t outcomes = 0;
  ForEachTriple(nodes, [&](const std::array<std::int64_t, 3>& pipeline) {
    ++outcomes;
    for (std::int64_t member : pipeline) {
      if (member == kSlow) ++hits;
    }
  });
  return Rational(hits, outcomes);
}

Rational EnumSlowDestProb(std::int64_t nodes) {
  CheckBudget(nodes, 5);
  constexpr std::int64_t kSource = 1;
  constexpr std::int64_t kCrashed = 2;

  Rational total;
  const Rational third_weight(1, nodes - 2);
  for (std::int64_t third = 0; third < nodes; ++third) {
    if (third == kSource || third == kCrashed) continue;
    // Live non-holders of the block are the destination candidates.
    std::int64_t candidates = 0;
    std::int64_t slow_picks = 0;
    for (std::int64_t dest = 0; dest < nodes; ++dest) {
      if (dest == kSource || dest == kCrashed || dest == third) continue;
      ++candidates;
      if (dest == kSlow) ++slow_picks;
    }
    total += third_weight * Rational(slow_picks, candidates);
  }
  return total;
}

}  // namespace limpsim
