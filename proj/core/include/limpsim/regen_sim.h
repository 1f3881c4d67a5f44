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

// Monte Carlo simulation of degraded reads, writes and block regeneration.
//
// Two regeneration samplers are provided:
//
//  * protocol trials place every block of the cluster uniformly, crash a
//    node, plan one copy task per lost block and classify the result;
//  * assumption trials sample the closed-form model's own independence
//    assumptions, so they converge to prob_model.h exactly.
//
// Stall model: a copy to the slow node never finishes and a copy between
// good nodes finishes instantly. A good node is therefore degraded iff at
// least two of its copy tasks target the slow node, regardless of thread
// scheduling order.

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

#include "limpsim/estimate.h"
#include "limpsim/params.h"
#include "limpsim/random.h"

namespace limpsim {

using NodeId = std::int32_t;
using BlockId = std::int64_t;

namespace metric {
inline constexpr std::string_view kDegradedNode = "degraded_node";
inline constexpr std::string_view kDegradedCluster = "degraded_cluster";
inline constexpr std::string_view kDegradedBlock = "degraded_block";
inline constexpr std::string_view kDegradedBlockCaseC = "degraded_block_c";
inline constexpr std::string_view kDegradedBlockCaseD = "degraded_block_d";
inline constexpr std::string_view kAnyDegradedBlock = "any_degraded_block";
inline constexpr std::string_view kDegradedRead = "degraded_read_user";
inline constexpr std::string_view kDegradedWrite = "degraded_write_user";
}  // namespace metric

struct Placement {
  NodeId nodes = 0;
  // Sorted, distinct replica holders per block.
  std::vector<std::array<NodeId, 3>> replicas;

  BlockId block_count() const { return static_cast<BlockId>(replicas.size()); }
};

// Each block's replica set is uniform over all C(n,3) subsets, independently.
Placement GeneratePlacement(std::int64_t nodes, std::int64_t blocks, Engine& engine);

struct RegenScenario {
  Placement placement;
  NodeId crashed = 0;
  NodeId slow = 1;
  std::vector<BlockId> lost_blocks;  // ascending

  // The two replicas of `block` that survive the crash.
  std::array<NodeId, 2> LiveHolders(BlockId block) const;
  bool IsGood(NodeId node) const { return node != crashed && node != slow; }
};

RegenScenario MakeScenario(Placement placement, NodeId crashed, NodeId slow);

struct CopyTask {
  BlockId block = 0;
  NodeId source = 0;
  NodeId destination = 0;

  friend bool operator==(const CopyTask&, const CopyTask&) = default;
};

// One task per lost block, in lost_blocks order.
struct RegenPlan {
  std::vector<CopyTask> tasks;

  friend bool operator==(const RegenPlan&, const RegenPlan&) = default;
};

// Source uniform over the two live holders (the slow node included);
// destination uniform over the n - 3 live nodes holding no replica.
RegenPlan PlanRegeneration(const RegenScenario& scenario, Engine& engine);

// Throws plan-mismatch if the plan does not cover exactly the lost blocks,
// invalid-params if a task violates the source/destination rules.
void ValidatePlan(const RegenScenario& scenario, const RegenPlan& plan);

struct TrialOutcome {
  std::vector<NodeId> degraded_nodes;  // ascending good-node ids
  bool cluster_degraded = false;
  std::int64_t degraded_block_count = 0;
  // Case c: both live holders are degraded good nodes.
  std::int64_t case_c_count = 0;
  // Case d: one live holder is the slow node, the other a degraded good node.
  std::int64_t case_d_count = 0;
};

TrialOutcome ClassifyOutcome(const RegenScenario& scenario, const RegenPlan& plan);

// Node 0 crashes and node 1 is slow in every trial. Reports kDegradedNode
// (per good node), kDegradedCluster, kDegradedBlock, kDegradedBlockCaseC,
// kDegradedBlockCaseD (per lost block) and kAnyDegradedBlock (per trial).
EstimateMap RunProtocolTrials(std::int64_t nodes, std::int64_t total_blocks,
                              std::uint64_t trials, std::uint64_t master_seed,
                              unsigned workers = 0);

// Samples the analytic model directly: every good node gets floor(m) or
// ceil(m) tasks (mean m), each hitting the slow node with p = 1/(n-2); block
// holders are a uniform pair of the n-1 survivors. Same metrics as above; the
// any-block metric draws each of the b lost blocks against independently
// sampled holder states, matching the model's independence across blocks.
EstimateMap RunAssumptionTrials(const RegenParams& params, std::uint64_t trials,
                                std::uint64_t master_seed, unsigned workers = 0);

enum class RequestKind { kRead, kWrite };

// Fraction of trials in which at least one of `requests` requests touches
// the slow node.
EstimateSummary RunRequestTrials(RequestKind kind, std::int64_t nodes,
                                 std::int64_t requests, std::uint64_t trials,
                                 std::uint64_t master_seed, unsigned workers = 0);

}  // namespace limpsim
