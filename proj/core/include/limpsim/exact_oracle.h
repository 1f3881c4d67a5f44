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

// Brute-force enumeration over small clusters in exact arithmetic. These are
// independent of the closed forms in prob_model.h and exist to certify them.
//
// Node 0 always plays the slow node L. All functions throw
// Error(kBudgetExceeded) above kMaxEnumerationNodes.

#include <cstdint>

#include "limpsim/rational.h"

namespace limpsim {

inline constexpr std::int64_t kMaxEnumerationNodes = 16;

// Fraction of (replica placement, replica choice) pairs that read from L.
Rational EnumReadProb(std::int64_t nodes);

// Fraction of 3-node pipelines containing L.
Rational EnumWriteProb(std::int64_t nodes);

// Probability that a good source X picks L as destination when regenerating
// a block it shares with the crashed node C: the third replica is uniform over
// the n-2 nodes other than X and C, and the destination is uniform over the
// n-3 live non-holders.
Rational EnumSlowDestProb(std::int64_t nodes);

}  // namespace limpsim
