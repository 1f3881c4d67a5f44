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

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "limpsim/error.h"
#include "limpsim/prob_model.h"

namespace limpsim {
namespace {

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

class TempDir {
 public:
  TempDir() {
    path_ = std::filesystem::temp_directory_path() /
            ("limpsim_sweep_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
             "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

TEST(NodeRangeTest, Parse) {
  const NodeRange r = NodeRange::Parse("10..100:10");
  EXPECT_EQ(r.Values().size(), 10u);
  EXPECT_EQ(r.Values().front(), 10);
  EXPECT_EQ(r.Values().back(), 100);
  EXPECT_EQ(NodeRange::Parse("5..7").Values(), (std::vector<std::int64_t>{5, 6, 7}));
  EXPECT_EQ(NodeRange::Parse("42").Values(), (std::vector<std::int64_t>{42}));
  EXPECT_EQ(NodeRange::Parse("10..50:20").Values(), (std::vector<std::int64_t>{10, 30, 50}));
  EXPECT_THROW(NodeRange::Parse("10..5"), Error);
  EXPECT_THROW(NodeRange::Parse("1..5:0"), Error);
  EXPECT_THROW(NodeRange::Parse("abc"), Error);
}

TEST(BlockCountTest, ParseAndResolve) {
  EXPECT_EQ(BlockCount::Parse("3200").Resolve(100), 3200);
  EXPECT_EQ(BlockCount::Parse("10x").Resolve(30), 290);
  EXPECT_EQ(BlockCount::Parse("10x").ToString(), "10x");
  EXPECT_THROW(BlockCount::Parse("-1"), Error);
  EXPECT_THROW(BlockCount::Parse("x"), Error);
}

TEST(SweepTest, ReadAnalyticRows) {
  SweepSpec spec;
  spec.protocol = Protocol::kRead;
  spec.nodes = NodeRange{10, 100, 10};
  spec.requests = {1};
  const auto rows = RunSweep(spec);
  ASSERT_EQ(rows.size(), 10u);
  for (const CsvRow& row : rows) {
    EXPECT_EQ(row.protocol, "read");
    EXPECT_EQ(row.source, "analytic");
    EXPECT_DOUBLE_EQ(row.value, 1.0 / static_cast<double>(row.n));
    EXPECT_FALSE(row.trials.has_value());
    EXPECT_FALSE(row.seed.has_value());
  }
}

TEST(SweepTest, AnyBlockAnchor) {
  SweepSpec spec;
  spec.protocol = Protocol::kRegenAnyBlock;
  spec.nodes = NodeRange{100, 100, 1};
  spec.blocks = {BlockCount{3200, false}};
  const auto rows = RunSweep(spec);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_GE(rows[0].value, 0.999);
}

TEST(SweepTest, AnalyticIgnoresTrialsAndSeed) {
  SweepSpec a;
  a.protocol = Protocol::kRegenBlock;
  a.nodes = NodeRange{10, 40, 10};
  a.blocks = {{1, true}, {10, true}, {3200, false}};
  SweepSpec b = a;
  b.trials = 3;
  b.seed = 123456789;
  EXPECT_EQ(FormatCsv(RunSweep(a)), FormatCsv(RunSweep(b)));
}

TEST(SweepTest, RowsSortedAndSimulatedRowsCarryMetadata) {
  SweepSpec spec;
  spec.protocol = Protocol::kRegenBlock;
  spec.nodes = NodeRange{10, 20, 10};
  spec.blocks = {{10, true}, {2, true}};
  spec.mode = EvalMode::kBoth;
  spec.trials = 200;
  spec.seed = 77;
  const auto rows = RunSweep(spec);
  ASSERT_EQ(rows.size(), 2u * 2u * 2u * 3u);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto key = [](const CsvRow& r) { return std::tie(r.protocol, r.n, r.r_or_b, r.source, r.metric); };
    EXPECT_LT(key(rows[i - 1]), key(rows[i]));
  }
  for (const CsvRow& row : rows) {
    if (row.source == "analytic") continue;
    EXPECT_EQ(row.source, "sim-assumption");
    EXPECT_EQ(row.trials, 200u);
    EXPECT_EQ(row.seed, 77u);
    ASSERT_TRUE(row.ci_low && row.ci_high);
    EXPECT_LE(*row.ci_low, row.value);
    EXPECT_GE(*row.ci_high, row.value);
  }
}

TEST(SweepTest, SameSeedSameBytes) {
  SweepSpec spec;
  spec.protocol = Protocol::kWrite;
  spec.nodes = NodeRange{10, 30, 10};
  spec.requests = {1, 5};
  spec.mode = EvalMode::kSimulate;
  spec.trials = 500;
  EXPECT_EQ(FormatCsv(RunSweep(spec)), FormatCsv(RunSweep(spec)));
  SweepSpec single = spec;
  single.workers = 1;
  SweepSpec many = spec;
  many.workers = 3;
  EXPECT_EQ(FormatCsv(RunSweep(single)), FormatCsv(RunSweep(many)));
}

TEST(SweepTest, InvalidSpecs) {
  SweepSpec spec;
  spec.protocol = Protocol::kRegenNode;
  spec.nodes = NodeRange{4, 10, 1};
  EXPECT_THROW(RunSweep(spec), Error);
  spec.nodes = NodeRange{5, 10, 1};
  spec.blocks = {};
  EXPECT_THROW(RunSweep(spec), Error);
  spec.blocks = {{1, true}};
  spec.mode = EvalMode::kSimulate;
  spec.trials = 0;
  EXPECT_THROW(RunSweep(spec), Error);
}

TEST(CsvTest, RoundTripReproducesAnalyticValues) {
  SweepSpec spec;
  spec.protocol = Protocol::kRegenBlock;
  spec.nodes = NodeRange{5, 150, 5};
  spec.blocks = {{1, true}, {5, true}, {10, true}, {50, true}, {3200, false}};
  const auto rows = RunSweep(spec);
  const auto parsed = ParseCsv(FormatCsv(rows));
  ASSERT_EQ(parsed.size(), rows.size());
  for (const CsvRow& row : parsed) {
    const auto b = BlockDegradeProbs({row.n, row.r_or_b});
    const double fresh = row.metric == "degraded_block_c"   ? b.all_holders_degraded.value()
                         : row.metric == "degraded_block_d" ? b.slow_and_degraded.value()
                                                            : b.total.value();
    // 12 significant digits.
    EXPECT_NEAR(row.value, fresh, 5e-12 * std::abs(fresh)) << row.metric;
  }
}

TEST(CsvTest, FormatAndErrors) {
  EXPECT_EQ(FormatReal(0.1), "0.100000000000");
  EXPECT_EQ(FormatReal(0.0), "0.00000000000");
  const std::string csv = FormatCsv({});
  EXPECT_EQ(csv, std::string(kCsvHeader) + "\n");
  EXPECT_THROW(ParseCsv("nope\n"), Error);
  EXPECT_THROW(ParseCsv(std::string(kCsvHeader) + "\nread,1\n"), Error);
  EXPECT_EQ(FormatCsv({}).find('\r'), std::string::npos);
}

TEST(CsvTest, AtomicWriteAndIoError) {
  TempDir dir;
  const auto path = dir.path() / "out.csv";
  WriteFileAtomically(path, "hello\n");
  EXPECT_EQ(ReadFile(path), "hello\n");
  WriteFileAtomically(path, "again\n");
  EXPECT_EQ(ReadFile(path), "again\n");
  for (const auto& entry : std::filesystem::directory_iterator(dir.path())) {
    EXPECT_EQ(entry.path().filename(), "out.csv");
  }
  try {
    WriteFileAtomically(dir.path() / "missing" / "x.csv", "x");
    ADD_FAILURE() << "expected io-error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIo);
  }
}

TEST(CompareTest, AssumptionModePasses) {
  CompareSpec spec;
  spec.nodes = NodeRange{10, 10, 1};
  spec.blocks = {{10, true}, {50, true}};
  spec.trials = 20000;
  spec.tolerance = 0.02;
  const CompareReport report = RunCompare(spec);
  EXPECT_EQ(report.entries.size(), 4u * 2u);
  EXPECT_TRUE(report.AllPass()) << report.RenderTable();
  EXPECT_NE(report.RenderTable().find("PASS"), std::string::npos);
  EXPECT_EQ(report.RenderCsv().substr(0, 8), "protocol");
}

TEST(CompareTest, TinyToleranceFails) {
  CompareSpec spec;
  spec.protocols = {Protocol::kRegenNode};
  spec.nodes = NodeRange{10, 10, 1};
  spec.blocks = {{10, true}};
  spec.trials = 100;
  spec.tolerance = 1e-9;
  spec.seed = 1;
  const CompareReport report = RunCompare(spec);
  ASSERT_EQ(report.entries.size(), 1u);
  // 100 trials x 8 good nodes cannot hit 0.3611 to within 1e-9.
  EXPECT_GT(report.entries[0].gap, 1e-9);
}

TEST(CompareTest, PassRule) {
  CompareSpec spec;
  spec.protocols = {Protocol::kRead, Protocol::kWrite};
  spec.nodes = NodeRange{10, 20, 10};
  spec.requests = {1, 10};
  spec.trials = 2000;
  spec.tolerance = 0.5;
  for (const CompareEntry& e : RunCompare(spec).entries) {
    const bool in_ci = e.analytic >= e.estimate.ci_low && e.analytic <= e.estimate.ci_high;
    EXPECT_EQ(e.pass, e.gap <= 0.5 || in_ci);
    EXPECT_TRUE(e.pass);
  }
}

TEST(CompareTest, RejectsBadTolerance) {
  CompareSpec spec;
  spec.tolerance = 0.0;
  EXPECT_THROW(RunCompare(spec), Error);
  spec.tolerance = 1.0;
  EXPECT_THROW(RunCompare(spec), Error);
}

TEST(CompareTest, DefaultProtocols) {
  EXPECT_EQ(DefaultCompareProtocols(SimKind::kAssumption).size(), 4u);
  EXPECT_EQ(DefaultCompareProtocols(SimKind::kProtocol).size(), 3u);
}

TEST(FigureTest, WriteFigureHasFortyRequestAnchor) {
  TempDir dir;
  const auto files = EmitFigureData(Figure::kWrite, dir.path(), {});
  ASSERT_EQ(files.size(), 2u);
  bool found = false;
  for (const auto& path : files) {
    for (const CsvRow& row : ParseCsv(ReadFile(path))) {
      if (row.n == 50 && row.r_or_b == 40) {
        found = true;
        EXPECT_NEAR(row.value, 0.91583836885657, 1e-11);
      }
    }
  }
  EXPECT_TRUE(found);
}

TEST(FigureTest, BlockFigureHasLargeClusterPoint) {
  TempDir dir;
  bool found = false;
  for (const auto& path : EmitFigureData(Figure::kBlock, dir.path(), {})) {
    for (const CsvRow& row : ParseCsv(ReadFile(path))) {
      if (row.n == 100 && row.r_or_b == 3200 && row.metric == "any_degraded_block") {
        found = true;
        EXPECT_GE(row.value, 0.999);
      }
    }
  }
  EXPECT_TRUE(found);
}

TEST(FigureTest, ReadRequestPanelIsOneOverN) {
  TempDir dir;
  const auto files = EmitFigureData(Figure::kRead, dir.path(), {});
  ASSERT_EQ(files.front().filename(), "read_request.csv");
  const auto rows = ParseCsv(ReadFile(files.front()));
  EXPECT_EQ(rows.size(), 10u);
  for (const CsvRow& row : rows) {
    EXPECT_EQ(row.r_or_b, 1);
    // CSV values carry 12 significant digits.
    EXPECT_NEAR(row.value, 1.0 / static_cast<double>(row.n), 1e-11 / static_cast<double>(row.n));
  }
}

TEST(FigureTest, NodeClusterPanelsWithSimulatedOverlay) {
  TempDir dir;
  FigureOptions options;
  options.mode = EvalMode::kBoth;
  options.trials = 50;
  const auto files = EmitFigureData(Figure::kNodeCluster, dir.path(), options);
  ASSERT_EQ(files.size(), 2u);
  const auto rows = ParseCsv(ReadFile(files[0]));
  // 10 node counts x 4 loads x {analytic, simulated}.
  EXPECT_EQ(rows.size(), 80u);
}

}  // namespace
}  // namespace limpsim
