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

// Closed-form probabilities that a single slow node L degrades reads, writes
// and block regeneration in a 3-way replicated cluster with uniform placement.
//
// Every function is pure and validates its parameters, throwing
// Error(kInvalidParams) on violation. Results are Probability values, so no
// NaN or out-of-range number ever escapes.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "limpsim/params.h"
#include "limpsim/probability.h"

namespace limpsim {

// Caller-owned sink for non-fatal model diagnostics.
using Diagnostics = std::vector<std::string>;

// 1 - (1 - p)^count, evaluated as -expm1(count * log1p(-p)).
Probability AtLeastOnce(Probability p, std::int64_t count);

// ---- reads and writes ----

// p_rl = 3/n * 1/3 = 1/n.
Probability ReadDegradeProb(const ClusterParams& cluster);

// P_rl = 1 - (1 - 1/n)^r.
Probability ReadUserDegradeProb(const ClusterParams& cluster,
                                const WorkloadParams& workload);

// p_wl = (C(n,3) - C(n-1,3)) / C(n,3) = 3/n.
Probability WriteDegradeProb(const ClusterParams& cluster);

// P_wl = 1 - (1 - 3/n)^r.
Probability WriteUserDegradeProb(const ClusterParams& cluster,
                                 const WorkloadParams& workload);

// ---- regeneration ----

// m = b / (n - 1) regeneration tasks per surviving node.
double RegenLoad(const RegenParams& params);

// p = 1 / (n - 2): a good node's copy task lands on L.
Probability SlowDestProb(const RegenParams& params);

// Human-readable warning when m < 2, the regime where "at least two tasks to
// L" extrapolates the binomial model to a fractional task count.
std::optional<std::string> RegenLoadDiagnostic(const RegenParams& params);

// P_nl = 1 - (1-p)^m - m p (1-p)^(m-1) with real-valued m. Returns exactly 0
// for m <= 1: a single task cannot pin both regeneration threads, and the
// real-exponent expression turns negative on (0, 1).
Probability NodeDegradeProb(const RegenParams& params,
                            Diagnostics* diagnostics = nullptr);

// P_cl = P_nl^(n-2).
Probability ClusterDegradeProb(const RegenParams& params);

// Binomial(n - 2, P_nl) distribution of the number of degraded good nodes.
struct DegradedNodeCountPmf {
  std::int64_t nodes = 0;
  std::int64_t lost_blocks = 0;
  Probability node_degrade;
  std::vector<Probability> mass;  // indexed by i = 0 .. n-2
};

DegradedNodeCountPmf DegradedNodeCountDistribution(const RegenParams& params);

struct BlockDegradeBreakdown {
  Probability all_holders_degraded;     // p_bl1: both live copies on degraded nodes
  Probability slow_and_degraded;        // p_bl2: one copy on L, one on a degraded node
  Probability total;                    // p_bl = p_bl1 + p_bl2
};

// Explicit summation over the degraded-node count distribution.
BlockDegradeBreakdown BlockDegradeProbs(const RegenParams& params);

// P_bl = 1 - (1 - p_bl)^b.
Probability AnyBlockDegradeProb(const RegenParams& params);

}  // namespace limpsim
