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

#include "limpsim/sweep.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <tuple>

#include "limpsim/error.h"
#include "limpsim/prob_model.h"
#include "limpsim/regen_sim.h"

namespace limpsim {

namespace {

constexpr std::string_view kAnalyticSource = "analytic";

std::int64_t ParseCount(std::string_view text, std::string_view what) {
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    ThrowInvalidParams("bad " + std::string(what) + ": '" + std::string(text) + "'");
  }
  return value;
}

std::string_view SimSource(Protocol protocol, SimKind sim) {
  if (!IsRegen(protocol)) return "sim-request";
  return sim == SimKind::kProtocol ? "sim-protocol" : "sim-assumption";
}

std::int64_t MinNodes(Protocol protocol) {
  return IsRegen(protocol) ? kMinRegenNodes : kMinClusterNodes;
}

double AnalyticValue(Protocol protocol, std::string_view metric_name, std::int64_t n,
                     std::int64_t r_or_b) {
  switch (protocol) {
    case Protocol::kRead:
      return ReadUserDegradeProb({n}, {r_or_b});
    case Protocol::kWrite:
      return WriteUserDegradeProb({n}, {r_or_b});
    case Protocol::kRegenNode:
      return NodeDegradeProb({n, r_or_b});
    case Protocol::kRegenCluster:
      return ClusterDegradeProb({n, r_or_b});
    case Protocol::kRegenBlock: {
      const BlockDegradeBreakdown breakdown = BlockDegradeProbs({n, r_or_b});
      if (metric_name == metric::kDegradedBlockCaseC) return breakdown.all_holders_degraded;
      if (metric_name == metric::kDegradedBlockCaseD) return breakdown.slow_and_degraded;
      return breakdown.total;
    }
    case Protocol::kRegenAnyBlock:
      return AnyBlockDegradeProb({n, r_or_b});
  }
  return 0.0;
}

// Grid of (n, r_or_b) points, deduplicated and sorted.
std::vector<std::pair<std::int64_t, std::int64_t>> GridPoints(
    Protocol protocol, const NodeRange& nodes, const std::vector<std::int64_t>& requests,
    const std::vector<BlockCount>& blocks,
    const std::vector<std::pair<std::int64_t, std::int64_t>>& extra) {
  std::vector<std::pair<std::int64_t, std::int64_t>> points;
  for (std::int64_t n : nodes.Values()) {
    if (IsRegen(protocol)) {
      for (const BlockCount& b : blocks) points.emplace_back(n, b.Resolve(n));
    } else {
      for (std::int64_t r : requests) points.emplace_back(n, r);
    }
  }
  if (IsRegen(protocol)) points.insert(points.end(), extra.begin(), extra.end());
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

void CheckGrid(Protocol protocol, const NodeRange& nodes,
               const std::vector<std::int64_t>& requests,
               const std::vector<BlockCount>& blocks) {
  if (nodes.stride < 1) ThrowInvalidParams("node stride must be >= 1");
  if (nodes.first > nodes.last) ThrowInvalidParams("empty node range " + nodes.ToString());
  if (nodes.first < MinNodes(protocol)) {
    ThrowInvalidParams(std::string(ProtocolName(protocol)) + " needs n >= " +
                       std::to_string(MinNodes(protocol)) + ", got range " +
                       nodes.ToString());
  }
  if (IsRegen(protocol)) {
    if (blocks.empty()) ThrowInvalidParams("empty block list");
    for (const BlockCount& b : blocks) {
      if (b.value < 0) ThrowInvalidParams("block counts must be non-negative");
    }
  } else {
    if (requests.empty()) ThrowInvalidParams("empty request list");
    for (std::int64_t r : requests) {
      if (r < 0) ThrowInvalidParams("request counts must be non-negative");
    }
  }
}

EstimateMap SimulateRegen(SimKind sim, std::int64_t n, std::int64_t b, std::uint64_t trials,
                          std::uint64_t seed, unsigned workers) {
  if (sim == SimKind::kProtocol) {
    if (b < 1) ThrowInvalidParams("protocol simulation needs at least one lost block");
    return RunProtocolTrials(n, ProtocolTotalBlocks(n, b), trials, seed, workers);
  }
  return RunAssumptionTrials({n, b}, trials, seed, workers);
}

EstimateSummary SimulateRequests(Protocol protocol, std::int64_t n, std::int64_t r,
                                 std::uint64_t trials, std::uint64_t seed, unsigned workers) {
  const RequestKind kind =
      protocol == Protocol::kRead ? RequestKind::kRead : RequestKind::kWrite;
  return RunRequestTrials(kind, n, r, trials, seed, workers);
}

CsvRow MakeSimRow(Protocol protocol, SimKind sim, std::int64_t n, std::int64_t r_or_b,
                  const EstimateSummary& estimate) {
  CsvRow row;
  row.protocol = std::string(ProtocolName(protocol));
  row.n = n;
  row.r_or_b = r_or_b;
  row.metric = estimate.metric;
  row.source = std::string(SimSource(protocol, sim));
  row.value = estimate.point_estimate;
  row.ci_low = estimate.ci_low;
  row.ci_high = estimate.ci_high;
  row.trials = estimate.trials;
  row.seed = estimate.master_seed;
  return row;
}

}  // namespace

std::string_view ProtocolName(Protocol protocol) {
  switch (protocol) {
    case Protocol::kRead:
      return "read";
    case Protocol::kWrite:
      return "write";
    case Protocol::kRegenNode:
      return "regen-node";
    case Protocol::kRegenCluster:
      return "regen-cluster";
    case Protocol::kRegenBlock:
      return "regen-block";
    case Protocol::kRegenAnyBlock:
      return "regen-any-block";
  }
  return "unknown";
}

std::optional<Protocol> ParseProtocol(std::string_view name) {
  for (Protocol p : {Protocol::kRead, Protocol::kWrite, Protocol::kRegenNode,
                     Protocol::kRegenCluster, Protocol::kRegenBlock,
                     Protocol::kRegenAnyBlock}) {
    if (ProtocolName(p) == name) return p;
  }
  return std::nullopt;
}

bool IsRegen(Protocol protocol) {
  return protocol != Protocol::kRead && protocol != Protocol::kWrite;
}

std::vector<std::string_view> ProtocolMetrics(Protocol protocol) {
  switch (protocol) {
    case Protocol::kRead:
      return {metric::kDegradedRead};
    case Protocol::kWrite:
      return {metric::kDegradedWrite};
    case Protocol::kRegenNode:
      return {metric::kDegradedNode};
    case Protocol::kRegenCluster:
      return {metric::kDegradedCluster};
    case Protocol::kRegenBlock:
      return {metric::kDegradedBlockCaseC, metric::kDegradedBlockCaseD,
              metric::kDegradedBlock};
    case Protocol::kRegenAnyBlock:
      return {metric::kAnyDegradedBlock};
  }
  return {};
}

std::vector<std::int64_t> NodeRange::Values() const {
  std::vector<std::int64_t> values;
  if (stride < 1) return values;
  for (std::int64_t n = first; n <= last; n += stride) values.push_back(n);
  return values;
}

std::string NodeRange::ToString() const {
  if (first == last) return std::to_string(first);
  return std::to_string(first) + ".." + std::to_string(last) + ":" + std::to_string(stride);
}

NodeRange NodeRange::Parse(std::string_view text) {
  NodeRange range;
  const std::size_t dots = text.find("..");
  if (dots == std::string_view::npos) {
    range.first = range.last = ParseCount(text, "node count");
    range.stride = 1;
    return range;
  }
  range.first = ParseCount(text.substr(0, dots), "node range start");
  std::string_view rest = text.substr(dots + 2);
  const std::size_t colon = rest.find(':');
  range.stride = 1;
  if (colon != std::string_view::npos) {
    range.stride = ParseCount(rest.substr(colon + 1), "node range stride");
    rest = rest.substr(0, colon);
  }
  range.last = ParseCount(rest, "node range end");
  if (range.stride < 1) ThrowInvalidParams("node range stride must be >= 1");
  if (range.first > range.last) ThrowInvalidParams("empty node range '" + std::string(text) + "'");
  return range;
}

std::int64_t BlockCount::Resolve(std::int64_t nodes) const {
  return per_survivor ? value * (nodes - 1) : value;
}

std::string BlockCount::ToString() const {
  return std::to_string(value) + (per_survivor ? "x" : "");
}

BlockCount BlockCount::Parse(std::string_view text) {
  BlockCount count;
  if (!text.empty() && (text.back() == 'x' || text.back() == 'X')) {
    count.per_survivor = true;
    text.remove_suffix(1);
  }
  count.value = ParseCount(text, "block count");
  if (count.value < 0) ThrowInvalidParams("block counts must be non-negative");
  return count;
}

std::string_view EvalModeName(EvalMode mode) {
  switch (mode) {
    case EvalMode::kAnalytic:
      return "analytic";
    case EvalMode::kSimulate:
      return "simulate";
    case EvalMode::kBoth:
      return "both";
  }
  return "unknown";
}

std::optional<EvalMode> ParseEvalMode(std::string_view name) {
  for (EvalMode m : {EvalMode::kAnalytic, EvalMode::kSimulate, EvalMode::kBoth}) {
    if (EvalModeName(m) == name) return m;
  }
  return std::nullopt;
}

std::string_view SimKindName(SimKind kind) {
  return kind == SimKind::kProtocol ? "protocol" : "assumption";
}

std::optional<SimKind> ParseSimKind(std::string_view name) {
  if (name == "assumption") return SimKind::kAssumption;
  if (name == "protocol") return SimKind::kProtocol;
  return std::nullopt;
}

std::int64_t ProtocolTotalBlocks(std::int64_t nodes, std::int64_t lost_blocks) {
  return std::llround(static_cast<double>(lost_blocks) * static_cast<double>(nodes) / 3.0);
}

void SweepSpec::Validate() const {
  CheckGrid(protocol, nodes, requests, blocks);
  for (const auto& [n, b] : extra_points) {
    if (IsRegen(protocol)) RegenParams{n, b}.Validate();
  }
  if (mode != EvalMode::kAnalytic && trials < 1) {
    ThrowInvalidParams("simulation needs --trials >= 1");
  }
}

std::vector<CsvRow> RunSweep(const SweepSpec& spec) {
  spec.Validate();
  std::vector<CsvRow> rows;
  const auto points =
      GridPoints(spec.protocol, spec.nodes, spec.requests, spec.blocks, spec.extra_points);
  const auto metrics = ProtocolMetrics(spec.protocol);
  const bool analytic = spec.mode != EvalMode::kSimulate;
  const bool simulate = spec.mode != EvalMode::kAnalytic;

  for (const auto& [n, x] : points) {
    if (analytic) {
      for (std::string_view m : metrics) {
        CsvRow row;
        row.protocol = std::string(ProtocolName(spec.protocol));
        row.n = n;
        row.r_or_b = x;
        row.metric = std::string(m);
        row.source = std::string(kAnalyticSource);
        row.value = AnalyticValue(spec.protocol, m, n, x);
        rows.push_back(std::move(row));
      }
    }
    if (simulate) {
      if (IsRegen(spec.protocol)) {
        const EstimateMap estimates =
            SimulateRegen(spec.sim, n, x, spec.trials, spec.seed, spec.workers);
        for (std::string_view m : metrics) {
          rows.push_back(
              MakeSimRow(spec.protocol, spec.sim, n, x, estimates.at(std::string(m))));
        }
      } else {
        rows.push_back(MakeSimRow(
            spec.protocol, spec.sim, n, x,
            SimulateRequests(spec.protocol, n, x, spec.trials, spec.seed, spec.workers)));
      }
    }
  }

  std::stable_sort(rows.begin(), rows.end(), [](const CsvRow& a, const CsvRow& b) {
    return std::tie(a.protocol, a.n, a.r_or_b, a.source, a.metric) <
           std::tie(b.protocol, b.n, b.r_or_b, b.source, b.metric);
  });
  return rows;
}

void CompareSpec::Validate() const {
  if (!(tolerance > 0.0 && tolerance < 1.0)) {
    ThrowInvalidParams("tolerance must lie in (0, 1)");
  }
  if (trials < 1) ThrowInvalidParams("compare needs --trials >= 1");
  const auto selected = protocols.empty() ? DefaultCompareProtocols(sim) : protocols;
  for (Protocol p : selected) CheckGrid(p, nodes, requests, blocks);
}

std::vector<Protocol> DefaultCompareProtocols(SimKind sim) {
  std::vector<Protocol> protocols{Protocol::kRegenNode, Protocol::kRegenCluster,
                                  Protocol::kRegenBlock};
  if (sim == SimKind::kAssumption) protocols.push_back(Protocol::kRegenAnyBlock);
  return protocols;
}

CompareReport RunCompare(const CompareSpec& spec) {
  spec.Validate();
  CompareReport report;
  report.tolerance = spec.tolerance;
  report.sim = spec.sim;

  const auto protocols =
      spec.protocols.empty() ? DefaultCompareProtocols(spec.sim) : spec.protocols;
  // Regeneration protocols share one simulation per (n, b).
  std::map<std::pair<std::int64_t, std::int64_t>, EstimateMap> regen_cache;

  for (Protocol protocol : protocols) {
    const auto points = GridPoints(protocol, spec.nodes, spec.requests, spec.blocks, {});
    const std::string_view principal = ProtocolMetrics(protocol).back();
    for (const auto& [n, x] : points) {
      CompareEntry entry;
      entry.protocol = protocol;
      entry.n = n;
      entry.r_or_b = x;
      entry.metric = std::string(principal);
      entry.analytic = AnalyticValue(protocol, principal, n, x);
      if (IsRegen(protocol)) {
        auto it = regen_cache.find({n, x});
        if (it == regen_cache.end()) {
          it = regen_cache
                   .emplace(std::make_pair(n, x),
                            SimulateRegen(spec.sim, n, x, spec.trials, spec.seed,
                                          spec.workers))
                   .first;
        }
        entry.estimate = it->second.at(entry.metric);
      } else {
        entry.estimate = SimulateRequests(protocol, n, x, spec.trials, spec.seed, spec.workers);
      }
      entry.gap = std::abs(entry.analytic - entry.estimate.point_estimate.value());
      entry.pass = entry.gap <= spec.tolerance ||
                   (entry.analytic >= entry.estimate.ci_low &&
                    entry.analytic <= entry.estimate.ci_high);
      report.entries.push_back(std::move(entry));
    }
  }
  return report;
}

bool CompareReport::AllPass() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const CompareEntry& e) { return e.pass; });
}

std::string CompareReport::RenderTable() const {
  std::ostringstream out;
  char line[256];
  std::snprintf(line, sizeof(line), "%-16s %5s %7s %-20s %14s %14s %14s %14s %11s  %s\n",
                "protocol", "n", "r_or_b", "metric", "analytic", "estimate", "ci_low",
                "ci_high", "gap", "result");
  out << line;
  for (const CompareEntry& e : entries) {
    std::snprintf(line, sizeof(line),
                  "%-16s %5lld %7lld %-20s %14.8g %14.8g %14.8g %14.8g %11.3e  %s\n",
                  std::string(ProtocolName(e.protocol)).c_str(),
                  static_cast<long long>(e.n), static_cast<long long>(e.r_or_b),
                  e.metric.c_str(), e.analytic, e.estimate.point_estimate.value(),
                  e.estimate.ci_low, e.estimate.ci_high, e.gap, e.pass ? "PASS" : "FAIL");
    out << line;
  }
  const auto failed = std::count_if(entries.begin(), entries.end(),
                                    [](const CompareEntry& e) { return !e.pass; });
  out << entries.size() << " points, " << failed << " failed (tolerance "
      << FormatReal(tolerance) << ", " << SimKindName(sim) << " simulation)\n";
  return out.str();
}

std::string CompareReport::RenderCsv() const {
  std::string out =
      "protocol,n,r_or_b,metric,analytic,estimate,ci_low,ci_high,gap,tolerance,pass,trials,seed\n";
  for (const CompareEntry& e : entries) {
    out += std::string(ProtocolName(e.protocol)) + ',' + std::to_string(e.n) + ',' +
           std::to_string(e.r_or_b) + ',' + e.metric + ',' + FormatReal(e.analytic) + ',' +
           FormatReal(e.estimate.point_estimate) + ',' + FormatReal(e.estimate.ci_low) +
           ',' + FormatReal(e.estimate.ci_high) + ',' + FormatReal(e.gap) + ',' +
           FormatReal(tolerance) + ',' + (e.pass ? "1" : "0") + ',' +
           std::to_string(e.estimate.trials) + ',' + std::to_string(e.estimate.master_seed) +
           '\n';
  }
  return out;
}

std::string_view FigureName(Figure figure) {
  switch (figure) {
    case Figure::kRead:
      return "read";
    case Figure::kWrite:
      return "write";
    case Figure::kNodeCluster:
      return "node-cluster";
    case Figure::kBlock:
      return "block";
  }
  return "unknown";
}

std::optional<Figure> ParseFigure(std::string_view name) {
  for (Figure f : {Figure::kRead, Figure::kWrite, Figure::kNodeCluster, Figure::kBlock}) {
    if (FigureName(f) == name) return f;
  }
  return std::nullopt;
}

std::vector<FigurePanel> FigurePanels(Figure figure, const FigureOptions& options) {
  SweepSpec base;
  base.nodes = NodeRange{10, 100, 10};
  base.mode = options.mode;
  base.sim = options.sim;
  base.trials = options.trials;
  base.seed = options.seed;
  base.workers = options.workers;

  const std::vector<BlockCount> loads{{1, true}, {5, true}, {10, true}, {50, true}};
  const std::vector<std::pair<std::int64_t, std::int64_t>> anchor{{100, 3200}};

  auto panel = [&](std::string name, Protocol protocol) {
    FigurePanel p{std::move(name), base};
    p.spec.protocol = protocol;
    return p;
  };

  std::vector<FigurePanel> panels;
  switch (figure) {
    case Figure::kRead:
    case Figure::kWrite: {
      const bool read = figure == Figure::kRead;
      const Protocol protocol = read ? Protocol::kRead : Protocol::kWrite;
      const std::string stem(FigureName(figure));
      panels.push_back(panel(stem + "_request", protocol));
      panels.back().spec.requests = {1};
      panels.push_back(panel(stem + "_user", protocol));
      panels.back().spec.requests = read ? std::vector<std::int64_t>{1, 10, 100, 1000}
                                         : std::vector<std::int64_t>{1, 10, 40, 100, 1000};
      break;
    }
    case Figure::kNodeCluster:
      panels.push_back(panel("regen_node", Protocol::kRegenNode));
      panels.push_back(panel("regen_cluster", Protocol::kRegenCluster));
      for (auto& p : panels) p.spec.blocks = loads;
      break;
    case Figure::kBlock:
      panels.push_back(panel("regen_block", Protocol::kRegenBlock));
      panels.push_back(panel("regen_any_block", Protocol::kRegenAnyBlock));
      for (auto& p : panels) {
        p.spec.blocks = loads;
        p.spec.extra_points = anchor;
      }
      break;
  }
  return panels;
}

std::vector<std::filesystem::path> EmitFigureData(Figure figure,
                                                  const std::filesystem::path& dir,
                                                  const FigureOptions& options) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::kIo, "cannot create " + dir.string() + ": " + ec.message());
  std::vector<std::filesystem::path> written;
  for (const FigurePanel& p : FigurePanels(figure, options)) {
    const std::filesystem::path path = dir / (p.name + ".csv");
    WriteFileAtomically(path, FormatCsv(RunSweep(p.spec)));
    written.push_back(path);
  }
  return written;
}

}  // namespace limpsim
