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

#include "cli.h"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string_view>

#include "CLI11.hpp"
#include "json.hpp"
#include "limpsim/error.h"
#include "limpsim/prob_model.h"
#include "limpsim/sweep.h"

namespace limpsim::cli {

namespace {

using nlohmann::json;

// Effective settings of one invocation: built-in defaults, then the --config
// file, then explicit flags.
struct Settings {
  std::string protocol;
  std::string nodes;
  std::string requests;
  std::string blocks;
  std::uint64_t trials = 10000;
  std::uint64_t seed = 42;
  std::string mode = "analytic";
  std::string sim = "assumption";
  double tolerance = 0.02;
  std::string out;
  unsigned workers = 0;
  std::string figure = "all";
};

Settings Defaults(std::string_view command) {
  Settings s;
  if (command == "compare") {
    s.nodes = "10..50:20";
    s.requests = "1,10,100";
    s.blocks = "1x,10x,50x";
    s.trials = 100000;
  } else if (command == "figures") {
    s.out = "figures";
  } else {
    s.protocol = "read";
    s.nodes = command == "model" ? "10" : "10..100:10";
    s.requests = "1";
    s.blocks = "10x";
  }
  return s;
}

json ToJson(const Settings& s) {
  return json{{"protocol", s.protocol}, {"nodes", s.nodes},       {"requests", s.requests},
              {"blocks", s.blocks},     {"trials", s.trials},     {"seed", s.seed},
              {"mode", s.mode},         {"sim", s.sim},           {"tolerance", s.tolerance},
              {"out", s.out},           {"workers", s.workers},   {"figure", s.figure}};
}

// Lists may be given in JSON as arrays or as comma-separated strings.
std::string ListField(const json& value) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_number_integer()) return std::to_string(value.get<std::int64_t>());
  if (!value.is_array()) throw json::type_error::create(302, "expected list or string", &value);
  std::string joined;
  for (const json& item : value) {
    if (!joined.empty()) joined += ',';
    joined += item.is_string() ? item.get<std::string>() : std::to_string(item.get<std::int64_t>());
  }
  return joined;
}

void ApplyConfigFile(const std::string& path, Settings& s) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot read config file " + path);
  json config;
  try {
    config = json::parse(in);
  } catch (const json::exception& e) {
    ThrowInvalidParams("config file " + path + ": " + e.what());
  }
  if (!config.is_object()) ThrowInvalidParams("config file " + path + " must hold a JSON object");
  try {
    for (const auto& [key, value] : config.items()) {
      if (key == "protocol") s.protocol = ListField(value);
      else if (key == "nodes") s.nodes = ListField(value);
      else if (key == "requests") s.requests = ListField(value);
      else if (key == "blocks") s.blocks = ListField(value);
      else if (key == "trials") s.trials = value.get<std::uint64_t>();
      else if (key == "seed") s.seed = value.get<std::uint64_t>();
      else if (key == "mode") s.mode = value.get<std::string>();
      else if (key == "sim") s.sim = value.get<std::string>();
      else if (key == "tolerance") s.tolerance = value.get<double>();
      else if (key == "out") s.out = value.get<std::string>();
      else if (key == "workers") s.workers = value.get<unsigned>();
      else if (key == "figure") s.figure = value.get<std::string>();
      else ThrowInvalidParams("unknown config key '" + key + "' in " + path);
    }
  } catch (const json::exception& e) {
    ThrowInvalidParams("config file " + path + ": " + e.what());
  }
}

std::vector<std::string> SplitList(const std::string& text) {
  std::vector<std::string> items;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (!item.empty()) items.push_back(item);
  }
  return items;
}

std::vector<std::int64_t> ParseRequests(const std::string& text) {
  std::vector<std::int64_t> values;
  for (const std::string& item : SplitList(text)) {
    const BlockCount parsed = BlockCount::Parse(item);
    if (parsed.per_survivor) ThrowInvalidParams("request counts take no 'x' suffix");
    values.push_back(parsed.value);
  }
  if (values.empty()) ThrowInvalidParams("empty --requests list");
  return values;
}

std::vector<BlockCount> ParseBlocks(const std::string& text) {
  std::vector<BlockCount> values;
  for (const std::string& item : SplitList(text)) values.push_back(BlockCount::Parse(item));
  if (values.empty()) ThrowInvalidParams("empty --blocks list");
  return values;
}

std::vector<Protocol> ParseProtocols(const std::string& text) {
  std::vector<Protocol> protocols;
  for (const std::string& item : SplitList(text)) {
    const auto p = ParseProtocol(item);
    if (!p) ThrowInvalidParams("unknown protocol '" + item + "'");
    protocols.push_back(*p);
  }
  return protocols;
}

Protocol ParseSingleProtocol(const std::string& text) {
  const auto protocols = ParseProtocols(text);
  if (protocols.size() != 1) ThrowInvalidParams("exactly one --protocol is required");
  return protocols.front();
}

EvalMode ParseMode(const std::string& text) {
  const auto mode = ParseEvalMode(text);
  if (!mode) ThrowInvalidParams("--mode must be analytic, simulate or both");
  return *mode;
}

SimKind ParseSim(const std::string& text) {
  const auto sim = ParseSimKind(text);
  if (!sim) ThrowInvalidParams("--sim must be assumption or protocol");
  return *sim;
}

SweepSpec ToSweepSpec(const Settings& s) {
  SweepSpec spec;
  spec.protocol = ParseSingleProtocol(s.protocol);
  spec.nodes = NodeRange::Parse(s.nodes);
  spec.requests = ParseRequests(s.requests);
  spec.blocks = ParseBlocks(s.blocks);
  spec.mode = ParseMode(s.mode);
  spec.sim = ParseSim(s.sim);
  spec.trials = s.trials;
  spec.seed = s.seed;
  spec.workers = s.workers;
  return spec;
}

void EmitDiagnostics(const SweepSpec& spec, std::ostream& err) {
  if (!IsRegen(spec.protocol) || spec.mode == EvalMode::kSimulate) return;
  for (std::int64_t n : spec.nodes.Values()) {
    for (const BlockCount& b : spec.blocks) {
      if (auto warning = RegenLoadDiagnostic({n, b.Resolve(n)})) {
        err << "warning: " << *warning << "\n";
      }
    }
  }
}

void WriteOutput(const std::string& path, const std::string& contents, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << contents;
  } else {
    WriteFileAtomically(path, contents);
  }
}

int RunModel(const Settings& s, std::ostream& out, std::ostream& err) {
  SweepSpec spec = ToSweepSpec(s);
  if (spec.nodes.first != spec.nodes.last) ThrowInvalidParams("model takes a single --nodes value");
  const std::size_t points = IsRegen(spec.protocol) ? spec.blocks.size() : spec.requests.size();
  if (points != 1) ThrowInvalidParams("model takes a single --requests or --blocks value");
  spec.mode = EvalMode::kAnalytic;
  EmitDiagnostics(spec, err);
  WriteOutput(s.out, FormatCsv(RunSweep(spec)), out);
  return kExitOk;
}

int RunSweepCommand(const Settings& s, std::ostream& out, std::ostream& err) {
  const SweepSpec spec = ToSweepSpec(s);
  EmitDiagnostics(spec, err);
  WriteOutput(s.out, FormatCsv(RunSweep(spec)), out);
  return kExitOk;
}

int RunCompareCommand(const Settings& s, std::ostream& out, std::ostream&) {
  CompareSpec spec;
  if (!s.protocol.empty()) spec.protocols = ParseProtocols(s.protocol);
  spec.nodes = NodeRange::Parse(s.nodes);
  spec.requests = ParseRequests(s.requests);
  spec.blocks = ParseBlocks(s.blocks);
  spec.sim = ParseSim(s.sim);
  spec.trials = s.trials;
  spec.seed = s.seed;
  spec.tolerance = s.tolerance;
  spec.workers = s.workers;
  const CompareReport report = RunCompare(spec);
  out << report.RenderTable();
  if (!s.out.empty()) WriteFileAtomically(s.out, report.RenderCsv());
  return report.AllPass() ? kExitOk : kExitToleranceFailure;
}

int RunFigures(const Settings& s, std::ostream& out, std::ostream&) {
  std::vector<Figure> figures;
  if (s.figure == "all") {
    figures = {Figure::kRead, Figure::kWrite, Figure::kNodeCluster, Figure::kBlock};
  } else {
    for (const std::string& name : SplitList(s.figure)) {
      const auto figure = ParseFigure(name);
      if (!figure) ThrowInvalidParams("unknown figure '" + name + "'");
      figures.push_back(*figure);
    }
  }
  FigureOptions options;
  options.mode = ParseMode(s.mode);
  options.sim = ParseSim(s.sim);
  options.trials = s.trials;
  options.seed = s.seed;
  options.workers = s.workers;
  if (s.out.empty()) ThrowInvalidParams("figures needs an output directory (--out)");
  for (Figure figure : figures) {
    for (const auto& path : EmitFigureData(figure, s.out, options)) {
      out << path.string() << "\n";
    }
  }
  return kExitOk;
}

struct Flags {
  std::string protocol, nodes, requests, blocks, mode, sim, out, config, figure;
  std::uint64_t trials = 0, seed = 0;
  double tolerance = 0.0;
  unsigned workers = 0;
  bool show_config = false;
};

void AddCommonOptions(CLI::App* cmd, Flags& f) {
  cmd->add_option("--protocol", f.protocol,
                  "read|write|regen-node|regen-cluster|regen-block|regen-any-block "
                  "(comma list for compare)");
  cmd->add_option("--nodes", f.nodes, "node counts: A..B:S, A..B or A");
  cmd->add_option("--requests", f.requests, "comma list of request counts r");
  cmd->add_option("--blocks", f.blocks,
                  "comma list of lost-block counts b; Kx means K*(n-1)");
  cmd->add_option("--trials", f.trials, "Monte Carlo trials per grid point");
  cmd->add_option("--seed", f.seed, "64-bit master seed");
  cmd->add_option("--mode", f.mode, "analytic|simulate|both");
  cmd->add_option("--sim", f.sim, "simulator for regeneration: assumption|protocol");
  cmd->add_option("--tolerance", f.tolerance, "absolute probability gap allowed by compare");
  cmd->add_option("--workers", f.workers, "worker threads (0 = all cores)");
  cmd->add_option("--out", f.out, "output file (sweep/model/compare) or directory (figures)");
  cmd->add_option("--config", f.config, "JSON config file; flags override its values");
  cmd->add_flag("--show-config", f.show_config, "print the effective configuration and exit");
}

Settings Resolve(const CLI::App* cmd, const Flags& f) {
  Settings s = Defaults(cmd->get_name());
  if (!f.config.empty()) ApplyConfigFile(f.config, s);
  auto given = [&](const char* name) { return cmd->get_option(name)->count() > 0; };
  if (given("--protocol")) s.protocol = f.protocol;
  if (given("--nodes")) s.nodes = f.nodes;
  if (given("--requests")) s.requests = f.requests;
  if (given("--blocks")) s.blocks = f.blocks;
  if (given("--trials")) s.trials = f.trials;
  if (given("--seed")) s.seed = f.seed;
  if (given("--mode")) s.mode = f.mode;
  if (given("--sim")) s.sim = f.sim;
  if (given("--tolerance")) s.tolerance = f.tolerance;
  if (given("--workers")) s.workers = f.workers;
  if (given("--out")) s.out = f.out;
  if (cmd->get_name() == "figures" && cmd->get_option("--figure")->count() > 0) {
    s.figure = f.figure;
  }
  return s;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"limpsim: probability that one slow node degrades HDFS-style reads, "
               "writes and block regeneration"};
  app.require_subcommand(1);

  Flags flags;
  CLI::App* model = app.add_subcommand("model", "single analytic evaluation");
  CLI::App* sweep = app.add_subcommand("sweep", "sweep parameters and emit a CSV dataset");
  CLI::App* compare =
      app.add_subcommand("compare", "check simulated estimates against the analytic model");
  CLI::App* figures = app.add_subcommand("figures", "emit canonical figure datasets");
  for (CLI::App* cmd : {model, sweep, compare, figures}) AddCommonOptions(cmd, flags);
  figures->add_option("--figure", flags.figure, "read|write|node-cluster|block|all");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  CLI::App* cmd = app.get_subcommands().front();
  try {
    const Settings settings = Resolve(cmd, flags);
    if (flags.show_config) {
      out << ToJson(settings).dump(2) << "\n";
      return kExitOk;
    }
    if (cmd == model) return RunModel(settings, out, err);
    if (cmd == sweep) return RunSweepCommand(settings, out, err);
    if (cmd == compare) return RunCompareCommand(settings, out, err);
    return RunFigures(settings, out, err);
  } catch (const Error& e) {
    err << "limpsim " << cmd->get_name() << ": " << e.what() << "\n";
    if (e.code() == ErrorCode::kInvalidParams) err << cmd->help();
    return kExitUsage;
  }
}

}  // namespace limpsim::cli
