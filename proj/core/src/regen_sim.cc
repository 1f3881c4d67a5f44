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

#include "limpsim/regen_sim.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "limpsim/error.h"
#include "limpsim/trial_runner.h"

namespace limpsim {

namespace {

void CheckTrials(std::uint64_t trials) {
  if (trials < 1) ThrowInvalidParams("at least one trial is required");
}

void CheckNodeRange(std::int64_t nodes, std::int64_t minimum) {
  if (nodes < minimum) {
    ThrowInvalidParams("need at least " + std::to_string(minimum) + " nodes, got n=" +
                       std::to_string(nodes));
  }
  if (nodes > std::numeric_limits<NodeId>::max()) {
    ThrowInvalidParams("node count too large: " + std::to_string(nodes));
  }
}

bool Holds(const std::array<NodeId, 3>& replicas, NodeId node) {
  return std::find(replicas.begin(), replicas.end(), node) != replicas.end();
}

struct RegenTally {
  std::uint64_t degraded_nodes = 0;
  std::uint64_t good_nodes = 0;
  std::uint64_t degraded_clusters = 0;
  std::uint64_t degraded_blocks = 0;
  std::uint64_t case_c = 0;
  std::uint64_t case_d = 0;
  std::uint64_t blocks = 0;
  std::uint64_t any_block_trials = 0;

  RegenTally& operator+=(const RegenTally& o) {
    degraded_nodes += o.degraded_nodes;
    good_nodes += o.good_nodes;
    degraded_clusters += o.degraded_clusters;
    degraded_blocks += o.degraded_blocks;
    case_c += o.case_c;
    case_d += o.case_d;
    blocks += o.blocks;
    any_block_trials += o.any_block_trials;
    return *this;
  }
};

EstimateMap ToEstimates(const RegenTally& t, std::uint64_t trials, std::uint64_t seed) {
  EstimateMap out;
  auto add = [&](std::string_view name, std::uint64_t successes, std::uint64_t observations) {
    out.emplace(std::string(name),
                Summarize(std::string(name), trials, successes, observations, seed));
  };
  add(metric::kDegradedNode, t.degraded_nodes, t.good_nodes);
  add(metric::kDegradedCluster, t.degraded_clusters, trials);
  add(metric::kDegradedBlock, t.degraded_blocks, t.blocks);
  add(metric::kDegradedBlockCaseC, t.case_c, t.blocks);
  add(metric::kDegradedBlockCaseD, t.case_d, t.blocks);
  add(metric::kAnyDegradedBlock, t.any_block_trials, trials);
  return out;
}

// Per-node sampler of the analytic model's task assignment.
class ModelNodeSampler {
 public:
  explicit ModelNodeSampler(const RegenParams& params)
      : whole_tasks_(std::floor(params.LoadPerNode())),
        fraction_(params.LoadPerNode() - whole_tasks_),
        slow_dest_(1.0 / static_cast<double>(params.nodes - 2)) {}

  // Draws a task count with mean m, then whether >= 2 of those tasks hit L.
  bool SampleDegraded(Engine& engine) const {
    auto tasks = static_cast<std::uint64_t>(whole_tasks_);
    if (fraction_ > 0.0 && Bernoulli(engine, fraction_)) ++tasks;
    if (tasks < 2) return false;
    // Hits >= 2 iff the second success arrives within `tasks` attempts.
    const std::uint64_t first_gap = GeometricFailures(engine, slow_dest_);
    if (first_gap + 2 > tasks) return false;
    const std::uint64_t second_gap = GeometricFailures(engine, slow_dest_);
    return first_gap + second_gap + 2 <= tasks;
  }

 private:
  double whole_tasks_;
  double fraction_;
  double slow_dest_;
};

// Uniform unordered pair of the n-1 survivors; index n-2 stands for L and
// 0 .. n-3 for the good nodes.
std::array<std::int64_t, 2> SampleSurvivorPair(Engine& engine, std::int64_t nodes) {
  const auto live = static_cast<std::uint64_t>(nodes - 1);
  const auto first = static_cast<std::int64_t>(UniformBelow(engine, live));
  auto second = static_cast<std::int64_t>(UniformBelow(engine, live - 1));
  if (second >= first) ++second;
  return {first, second};
}

}  // namespace

Placement GeneratePlacement(std::int64_t nodes, std::int64_t blocks, Engine& engine) {
  CheckNodeRange(nodes, kMinRegenNodes);
  if (blocks < 1) ThrowInvalidParams("placement needs at least one block");
  Placement placement;
  placement.nodes = static_cast<NodeId>(nodes);
  placement.replicas.reserve(static_cast<std::size_t>(blocks));
  for (std::int64_t i = 0; i < blocks; ++i) {
    placement.replicas.push_back(SampleTriple(engine, placement.nodes));
  }
  return placement;
}

std::array<NodeId, 2> RegenScenario::LiveHolders(BlockId block) const {
  const auto& replicas = placement.replicas.at(static_cast<std::size_t>(block));
  std::array<NodeId, 2> live{};
  int count = 0;
  for (NodeId holder : replicas) {
    if (holder == crashed) continue;
    if (count == 2) ThrowInvalidParams("block " + std::to_string(block) + " was not lost");
    live[count++] = holder;
  }
  return live;
}

RegenScenario MakeScenario(Placement placement, NodeId crashed, NodeId slow) {
  const NodeId n = placement.nodes;
  if (crashed < 0 || crashed >= n || slow < 0 || slow >= n) {
    ThrowInvalidParams("crashed/slow node id out of range");
  }
  if (crashed == slow) ThrowInvalidParams("crashed and slow node must differ");

  RegenScenario scenario;
  scenario.crashed = crashed;
  scenario.slow = slow;
  for (BlockId b = 0; b < placement.block_count(); ++b) {
    if (Holds(placement.replicas[static_cast<std::size_t>(b)], crashed)) {
      scenario.lost_blocks.push_back(b);
    }
  }
  scenario.placement = std::move(placement);
  return scenario;
}

RegenPlan PlanRegeneration(const RegenScenario& scenario, Engine& engine) {
  const NodeId n = scenario.placement.nodes;
  RegenPlan plan;
  plan.tasks.reserve(scenario.lost_blocks.size());
  for (BlockId block : scenario.lost_blocks) {
    const auto& replicas = scenario.placement.replicas[static_cast<std::size_t>(block)];
    const std::array<NodeId, 2> live = scenario.LiveHolders(block);
    CopyTask task;
    task.block = block;
    task.source = live[UniformBelow(engine, 2)];
    // The k-th node (ascending) outside the sorted replica set.
    auto k = static_cast<NodeId>(UniformBelow(engine, static_cast<std::uint64_t>(n - 3)));
    for (NodeId holder : replicas) {
      if (holder <= k) ++k;
    }
    task.destination = k;
    plan.tasks.push_back(task);
  }
  return plan;
}

void ValidatePlan(const RegenScenario& scenario, const RegenPlan& plan) {
  std::vector<BlockId> planned;
  planned.reserve(plan.tasks.size());
  for (const CopyTask& task : plan.tasks) planned.push_back(task.block);
  std::sort(planned.begin(), planned.end());
  if (planned != scenario.lost_blocks) {
    throw Error(ErrorCode::kPlanMismatch, "plan does not cover exactly the lost blocks");
  }
  for (const CopyTask& task : plan.tasks) {
    const auto& replicas = scenario.placement.replicas[static_cast<std::size_t>(task.block)];
    if (task.source == scenario.crashed || !Holds(replicas, task.source)) {
      ThrowInvalidParams("task source is not a live holder of block " +
                         std::to_string(task.block));
    }
    if (task.destination < 0 || task.destination >= scenario.placement.nodes ||
        task.destination == scenario.crashed || Holds(replicas, task.destination)) {
      ThrowInvalidParams("task destination is not a live non-holder of block " +
                         std::to_string(task.block));
    }
  }
}

TrialOutcome ClassifyOutcome(const RegenScenario& scenario, const RegenPlan& plan) {
  std::vector<BlockId> planned;
  planned.reserve(plan.tasks.size());
  for (const CopyTask& task : plan.tasks) planned.push_back(task.block);
  std::sort(planned.begin(), planned.end());
  if (planned != scenario.lost_blocks) {
    throw Error(ErrorCode::kPlanMismatch, "plan does not cover exactly the lost blocks");
  }

  const NodeId n = scenario.placement.nodes;
  std::vector<int> stalled_threads(static_cast<std::size_t>(n), 0);
  for (const CopyTask& task : plan.tasks) {
    if (task.destination == scenario.slow && scenario.IsGood(task.source)) {
      ++stalled_threads[static_cast<std::size_t>(task.source)];
    }
  }

  TrialOutcome outcome;
  std::vector<bool> degraded(static_cast<std::size_t>(n), false);
  NodeId good_nodes = 0;
  for (NodeId node = 0; node < n; ++node) {
    if (!scenario.IsGood(node)) continue;
    ++good_nodes;
    // Both regeneration threads end up pinned on the slow node.
    if (stalled_threads[static_cast<std::size_t>(node)] >= 2) {
      degraded[static_cast<std::size_t>(node)] = true;
      outcome.degraded_nodes.push_back(node);
    }
  }
  outcome.cluster_degraded =
      static_cast<NodeId>(outcome.degraded_nodes.size()) == good_nodes;

  if (outcome.degraded_nodes.empty()) return outcome;
  for (BlockId block : scenario.lost_blocks) {
    const auto [a, b] = scenario.LiveHolders(block);
    const auto is_degraded = [&](NodeId node) {
      return scenario.IsGood(node) && degraded[static_cast<std::size_t>(node)];
    };
    if (is_degraded(a) && is_degraded(b)) {
      ++outcome.case_c_count;
    } else if ((a == scenario.slow && is_degraded(b)) ||
               (b == scenario.slow && is_degraded(a))) {
      ++outcome.case_d_count;
    }
  }
  outcome.degraded_block_count = outcome.case_c_count + outcome.case_d_count;
  return outcome;
}

EstimateMap RunProtocolTrials(std::int64_t nodes, std::int64_t total_blocks,
                              std::uint64_t trials, std::uint64_t master_seed,
                              unsigned workers) {
  CheckNodeRange(nodes, kMinRegenNodes);
  if (total_blocks < 1) ThrowInvalidParams("protocol trials need at least one block");
  CheckTrials(trials);

  const RegenTally tally = RunTrials<RegenTally>(
      trials, master_seed, workers, [&](Engine& engine, RegenTally& t) {
        RegenScenario scenario =
            MakeScenario(GeneratePlacement(nodes, total_blocks, engine), 0, 1);
        const RegenPlan plan = PlanRegeneration(scenario, engine);
        const TrialOutcome outcome = ClassifyOutcome(scenario, plan);
        t.degraded_nodes += outcome.degraded_nodes.size();
        t.good_nodes += static_cast<std::uint64_t>(nodes - 2);
        t.degraded_clusters += outcome.cluster_degraded ? 1 : 0;
        t.degraded_blocks += static_cast<std::uint64_t>(outcome.degraded_block_count);
        t.case_c += static_cast<std::uint64_t>(outcome.case_c_count);
        t.case_d += static_cast<std::uint64_t>(outcome.case_d_count);
        t.blocks += scenario.lost_blocks.size();
        t.any_block_trials += outcome.degraded_block_count > 0 ? 1 : 0;
      });
  return ToEstimates(tally, trials, master_seed);
}

EstimateMap RunAssumptionTrials(const RegenParams& params, std::uint64_t trials,
                                std::uint64_t master_seed, unsigned workers) {
  params.Validate();
  CheckTrials(trials);
  const std::int64_t n = params.nodes;
  const std::int64_t good = n - 2;
  const std::int64_t slow_index = n - 2;
  const ModelNodeSampler sampler(params);

  const RegenTally tally = RunTrials<RegenTally>(
      trials, master_seed, workers, [&](Engine& engine, RegenTally& t) {
        std::vector<bool> degraded(static_cast<std::size_t>(good));
        std::int64_t degraded_count = 0;
        for (std::int64_t x = 0; x < good; ++x) {
          degraded[static_cast<std::size_t>(x)] = sampler.SampleDegraded(engine);
          degraded_count += degraded[static_cast<std::size_t>(x)] ? 1 : 0;
        }
        t.degraded_nodes += static_cast<std::uint64_t>(degraded_count);
        t.good_nodes += static_cast<std::uint64_t>(good);
        t.degraded_clusters += degraded_count == good ? 1 : 0;

        // One designated lost block B against this trial's degraded set.
        const auto [a, b] = SampleSurvivorPair(engine, n);
        const auto in_world = [&](std::int64_t i) {
          return i != slow_index && degraded[static_cast<std::size_t>(i)];
        };
        ++t.blocks;
        if (in_world(a) && in_world(b)) {
          ++t.case_c;
          ++t.degraded_blocks;
        } else if ((a == slow_index && in_world(b)) || (b == slow_index && in_world(a))) {
          ++t.case_d;
          ++t.degraded_blocks;
        }

        // b lost blocks, each with freshly sampled holder states.
        for (std::int64_t block = 0; block < params.lost_blocks; ++block) {
          const auto [u, v] = SampleSurvivorPair(engine, n);
          const auto fresh = [&](std::int64_t i) {
            return i != slow_index && sampler.SampleDegraded(engine);
          };
          bool lost = false;
          if (u == slow_index || v == slow_index) {
            lost = fresh(u == slow_index ? v : u);
          } else {
            lost = fresh(u) && fresh(v);
          }
          if (lost) {
            ++t.any_block_trials;
            break;
          }
        }
      });
  return ToEstimates(tally, trials, master_seed);
}

EstimateSummary RunRequestTrials(RequestKind kind, std::int64_t nodes,
                                 std::int64_t requests, std::uint64_t trials,
                                 std::uint64_t master_seed, unsigned workers) {
  CheckNodeRange(nodes, kMinClusterNodes);
  if (requests < 0) ThrowInvalidParams("request count must be non-negative");
  CheckTrials(trials);
  constexpr NodeId kSlow = 0;
  const auto n = static_cast<NodeId>(nodes);

  struct Tally {
    std::uint64_t degraded = 0;
    Tally& operator+=(const Tally& o) {
      degraded += o.degraded;
      return *this;
    }
  };
  const Tally tally = RunTrials<Tally>(
      trials, master_seed, workers, [&](Engine& engine, Tally& t) {
        for (std::int64_t r = 0; r < requests; ++r) {
          const auto replicas = SampleTriple(engine, n);
          bool touched = false;
          if (kind == RequestKind::kRead) {
            touched = replicas[UniformBelow(engine, 3)] == kSlow;
          } else {
            touched = Holds(replicas, kSlow);
          }
          if (touched) {
            ++t.degraded;
            return;
          }
        }
      });
  const std::string_view name =
      kind == RequestKind::kRead ? metric::kDegradedRead : metric::kDegradedWrite;
  return Summarize(std::string(name), trials, tally.degraded, trials, master_seed);
}

}  // namespace limpsim
