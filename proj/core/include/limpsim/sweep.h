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

// Parameter sweeps, analytic-vs-simulation comparison and canonical figure
// datasets built on prob_model.h and regen_sim.h.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "limpsim/csv.h"
#include "limpsim/estimate.h"

namespace limpsim {

enum class Protocol {
  kRead,
  kWrite,
  kRegenNode,
  kRegenCluster,
  kRegenBlock,
  kRegenAnyBlock,
};

std::string_view ProtocolName(Protocol protocol);
std::optional<Protocol> ParseProtocol(std::string_view name);
bool IsRegen(Protocol protocol);

// Metrics reported for a protocol, in CSV order.
std::vector<std::string_view> ProtocolMetrics(Protocol protocol);

// Inclusive integer range "A..B:S", "A..B" (stride 1) or a single "A".
struct NodeRange {
  std::int64_t first = 10;
  std::int64_t last = 100;
  std::int64_t stride = 10;

  std::vector<std::int64_t> Values() const;
  std::string ToString() const;
  static NodeRange Parse(std::string_view text);
};

// A lost-block count: either absolute ("3200") or a multiple of the n - 1
// survivors ("10x" means b = 10 (n - 1), i.e. a load of 10 tasks per node).
struct BlockCount {
  std::int64_t value = 0;
  bool per_survivor = false;

  std::int64_t Resolve(std::int64_t nodes) const;
  std::string ToString() const;
  static BlockCount Parse(std::string_view text);

  friend bool operator==(const BlockCount&, const BlockCount&) = default;
};

enum class EvalMode { kAnalytic, kSimulate, kBoth };
enum class SimKind { kAssumption, kProtocol };

std::string_view EvalModeName(EvalMode mode);
std::optional<EvalMode> ParseEvalMode(std::string_view name);
std::string_view SimKindName(SimKind kind);
std::optional<SimKind> ParseSimKind(std::string_view name);

// Maps a lost-block count onto the cluster-wide block count planted by
// protocol trials: round(b n / 3).
std::int64_t ProtocolTotalBlocks(std::int64_t nodes, std::int64_t lost_blocks);

struct SweepSpec {
  Protocol protocol = Protocol::kRead;
  NodeRange nodes;
  std::vector<std::int64_t> requests{1};
  std::vector<BlockCount> blocks{BlockCount{10, true}};
  // Extra (n, b) points appended to a regeneration grid.
  std::vector<std::pair<std::int64_t, std::int64_t>> extra_points;
  EvalMode mode = EvalMode::kAnalytic;
  SimKind sim = SimKind::kAssumption;
  std::uint64_t trials = 10000;
  std::uint64_t seed = 42;
  unsigned workers = 0;

  // Throws invalid-params on an empty grid or zero trials in a simulating mode.
  void Validate() const;
};

// Rows sorted by (protocol, n, r_or_b, source, metric).
std::vector<CsvRow> RunSweep(const SweepSpec& spec);

struct CompareSpec {
  std::vector<Protocol> protocols;
  NodeRange nodes{10, 50, 20};
  std::vector<std::int64_t> requests{1, 10, 100};
  std::vector<BlockCount> blocks{{1, true}, {10, true}, {50, true}};
  SimKind sim = SimKind::kAssumption;
  std::uint64_t trials = 100000;
  std::uint64_t seed = 42;
  double tolerance = 0.02;
  unsigned workers = 0;

  void Validate() const;
};

// Protocols compared when CompareSpec::protocols is empty. The any-block
// metric is left out of protocol-faithful runs: the model treats lost blocks
// as independent while a real crash correlates them through one shared set
// of degraded nodes.
std::vector<Protocol> DefaultCompareProtocols(SimKind sim);

struct CompareEntry {
  Protocol protocol = Protocol::kRead;
  std::int64_t n = 0;
  std::int64_t r_or_b = 0;
  std::string metric;
  double analytic = 0.0;
  EstimateSummary estimate;
  double gap = 0.0;
  bool pass = false;
};

struct CompareReport {
  std::vector<CompareEntry> entries;
  double tolerance = 0.0;
  SimKind sim = SimKind::kAssumption;

  bool AllPass() const;
  std::string RenderTable() const;
  // protocol,n,r_or_b,metric,analytic,estimate,ci_low,ci_high,gap,tolerance,pass,trials,seed
  std::string RenderCsv() const;
};

// An entry passes iff |analytic - estimate| <= tolerance or the analytic value
// lies inside the estimate's Wilson interval.
CompareReport RunCompare(const CompareSpec& spec);

enum class Figure { kRead, kWrite, kNodeCluster, kBlock };

std::string_view FigureName(Figure figure);
std::optional<Figure> ParseFigure(std::string_view name);

struct FigureOptions {
  EvalMode mode = EvalMode::kAnalytic;
  SimKind sim = SimKind::kAssumption;
  std::uint64_t trials = 10000;
  std::uint64_t seed = 42;
  unsigned workers = 0;
};

// One panel of a figure: its file stem and the sweep that produces it.
struct FigurePanel {
  std::string name;
  SweepSpec spec;
};

// Canonical grids: n = 10..100 step 10; r in {1, 10, 100, 1000} (writes add
// r = 40); b = k (n - 1) for k in {1, 5, 10, 50}, plus (n = 100, b = 3200) on
// the block panels.
std::vector<FigurePanel> FigurePanels(Figure figure, const FigureOptions& options);

// Writes <dir>/<panel>.csv for every panel and returns the paths.
std::vector<std::filesystem::path> EmitFigureData(Figure figure,
                                                  const std::filesystem::path& dir,
                                                  const FigureOptions& options);

}  // namespace limpsim
