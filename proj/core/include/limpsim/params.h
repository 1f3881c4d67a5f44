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

namespace limpsim {

// Every model in this library assumes 3-way replication: a block lives on
// exactly three distinct nodes and a write pipeline spans three nodes.
inline constexpr int kReplicationFactor = 3;

// Smallest cluster for which the regeneration model is defined: the
// destination pool (n - 3 non-holders) must offer a real choice and the good
// set must extend past the {L, holder} pair.
inline constexpr std::int64_t kMinRegenNodes = 5;
inline constexpr std::int64_t kMinClusterNodes = kReplicationFactor;

struct ClusterParams {
  std::int64_t nodes = 0;

  // Throws invalid-params unless nodes >= 3.
  void Validate() const;
};

struct WorkloadParams {
  std::int64_t requests = 0;

  void Validate() const;
};

// A crashed node C held `lost_blocks` blocks; n - 1 nodes survive, one of
// which is the slow node L.
struct RegenParams {
  std::int64_t nodes = 0;
  std::int64_t lost_blocks = 0;

  // Throws invalid-params unless nodes >= 5 and lost_blocks >= 0.
  void Validate() const;

  // m = b / (n - 1), deliberately not rounded.
  double LoadPerNode() const {
    return static_cast<double>(lost_blocks) / static_cast<double>(nodes - 1);
  }
};

}  // namespace limpsim
