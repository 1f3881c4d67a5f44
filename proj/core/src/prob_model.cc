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

#include "limpsim/prob_model.h"

#include <cmath>
#include <sstream>

#include <boost/math/special_functions/gamma.hpp>

#include "limpsim/error.h"

namespace limpsim {

namespace {

double LogBinomial(std::int64_t n, std::int64_t k) {
  // boost's lgamma keeps no global sign state, unlike glibc's.
  return boost::math::lgamma(static_cast<double>(n + 1)) -
         boost::math::lgamma(static_cast<double>(k + 1)) -
         boost::math::lgamma(static_cast<double>(n - k + 1));
}

// C(n-1, 2): equally likely placements of the two surviving copies of a lost
// block over the n-1 live nodes.
double SurvivorPairCount(std::int64_t nodes) {
  const auto live = static_cast<double>(nodes - 1);
  return live * (live - 1.0) / 2.0;
}

}  // namespace

Probability AtLeastOnce(Probability p, std::int64_t count) {
  if (count < 0) ThrowInvalidParams("negative repetition count");
  if (count == 0 || p.value() == 0.0) return Probability::Zero();
  if (p.value() == 1.0) return Probability::One();
  return Probability::Clamped(
      -std::expm1(static_cast<double>(count) * std::log1p(-p.value())));
}

Probability ReadDegradeProb(const ClusterParams& cluster) {
  cluster.Validate();
  return Probability(1.0 / static_cast<double>(cluster.nodes));
}

Probability ReadUserDegradeProb(const ClusterParams& cluster,
                                const WorkloadParams& workload) {
  workload.Validate();
  return AtLeastOnce(ReadDegradeProb(cluster), workload.requests);
}

Probability WriteDegradeProb(const ClusterParams& cluster) {
  cluster.Validate();
  return Probability(3.0 / static_cast<double>(cluster.nodes));
}

Probability WriteUserDegradeProb(const ClusterParams& cluster,
                                 const WorkloadParams& workload) {
  workload.Validate();
  return AtLeastOnce(WriteDegradeProb(cluster), workload.requests);
}

double RegenLoad(const RegenParams& params) {
  params.Validate();
  return params.LoadPerNode();
}

Probability SlowDestProb(const RegenParams& params) {
  params.Validate();
  // (n-3)/(n-2) that L holds no copy, times 1/(n-3) that it is picked.
  return Probability(1.0 / static_cast<double>(params.nodes - 2));
}

std::optional<std::string> RegenLoadDiagnostic(const RegenParams& params) {
  params.Validate();
  if (params.lost_blocks >= 2 * (params.nodes - 1)) return std::nullopt;
  std::ostringstream msg;
  msg << "regeneration load m=" << params.LoadPerNode() << " < 2 (b=" << params.lost_blocks
      << ", n=" << params.nodes
      << "): degraded-node probability extrapolates a fractional task count";
  return msg.str();
}

Probability NodeDegradeProb(const RegenParams& params, Diagnostics* diagnostics) {
  params.Validate();
  if (diagnostics != nullptr) {
    if (auto warning = RegenLoadDiagnostic(params)) diagnostics->push_back(*warning);
  }
  const double m = params.LoadPerNode();
  if (m <= 1.0) return Probability::Zero();

  const double p = SlowDestProb(params).value();
  const double log_miss = std::log1p(-p);
  // 1 - (1-p)^m, then subtract the exactly-one-hit term.
  const double none_complement = -std::expm1(m * log_miss);
  const double exactly_one = m * p * std::exp((m - 1.0) * log_miss);
  return Probability::Clamped(none_complement - exactly_one);
}

Probability ClusterDegradeProb(const RegenParams& params) {
  const Probability node = NodeDegradeProb(params);
  return Probability::Clamped(
      std::pow(node.value(), static_cast<double>(params.nodes - 2)));
}

DegradedNodeCountPmf DegradedNodeCountDistribution(const RegenParams& params) {
  DegradedNodeCountPmf pmf;
  pmf.nodes = params.nodes;
  pmf.lost_blocks = params.lost_blocks;
  pmf.node_degrade = NodeDegradeProb(params);

  const std::int64_t good = params.nodes - 2;
  const double q = pmf.node_degrade.value();
  pmf.mass.assign(static_cast<std::size_t>(good + 1), Probability::Zero());
  if (q == 0.0) {
    pmf.mass.front() = Probability::One();
    return pmf;
  }
  if (q == 1.0) {
    pmf.mass.back() = Probability::One();
    return pmf;
  }
  const double log_q = std::log(q);
  const double log_not_q = std::log1p(-q);
  for (std::int64_t i = 0; i <= good; ++i) {
    const double log_mass = LogBinomial(good, i) + static_cast<double>(i) * log_q +
                            static_cast<double>(good - i) * log_not_q;
    pmf.mass[static_cast<std::size_t>(i)] = Probability::Clamped(std::exp(log_mass));
  }
  return pmf;
}

BlockDegradeBreakdown BlockDegradeProbs(const RegenParams& params) {
  const DegradedNodeCountPmf pmf = DegradedNodeCountDistribution(params);
  const double pairs = SurvivorPairCount(params.nodes);

  double both_degraded = 0.0;
  double slow_and_degraded = 0.0;
  for (std::size_t i = 1; i < pmf.mass.size(); ++i) {
    const double mass = pmf.mass[i].value();
    const auto degraded = static_cast<double>(i);
    // C(i,2) pairs inside the degraded set; i pairs of the form {L, degraded}.
    if (i >= 2) both_degraded += mass * degraded * (degraded - 1.0) / 2.0 / pairs;
    slow_and_degraded += mass * degraded / pairs;
  }

  BlockDegradeBreakdown breakdown;
  breakdown.all_holders_degraded = Probability::Clamped(both_degraded);
  breakdown.slow_and_degraded = Probability::Clamped(slow_and_degraded);
  breakdown.total = Probability::Clamped(breakdown.all_holders_degraded.value() +
                                         breakdown.slow_and_degraded.value());
  return breakdown;
}

Probability AnyBlockDegradeProb(const RegenParams& params) {
  return AtLeastOnce(BlockDegradeProbs(params).total, params.lost_blocks);
}

}  // namespace limpsim
