// Copyright 2026 The uitx Authors
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

// uitx: discover data transformations from UI logs.
//
//   uitx preprocess log.csv [--out filtered.csv]
//   uitx discover log.csv [--strategy baseline|opt1|opt1opt2]
//   uitx bench [--spec spec.json] [--format markdown|csv]
//
// Exit codes: 0 success, 2 bad input or usage, 3 I/O failure.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "uitx/bench.hpp"
#include "uitx/json.hpp"
#include "uitx/pipeline.hpp"
#include "uitx/uilog.hpp"

namespace {

constexpr int kExitInput = 2;
constexpr int kExitIo = 3;

struct GlobalFlags {
  std::uint64_t seed = 0;
  double timeout_secs = 60.0;
  std::size_t max_ops = 6;
  std::size_t workers = 1;
  std::string output = "table";
  std::string mode = "heuristic";
  std::string end_action = "Click button:Submit";
  bool strict_replay = false;
};

uitx::PipelineOptions pipeline_options(const GlobalFlags& g) {
  uitx::PipelineOptions o;
  o.budget.max_ops = g.max_ops;
  o.budget.timeout = std::chrono::duration<double>(g.timeout_secs);
  o.budget.validate();
  o.mode = g.mode == "exact" ? uitx::SearchMode::Exact : uitx::SearchMode::Heuristic;
  o.selection_seed = g.seed;
  o.workers = g.workers;
  return o;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::ios_base::failure("cannot write " + path);
  out << text;
  if (!out) throw std::ios_base::failure("write failed for " + path);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::ios_base::failure("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

uitx::Preprocessed load(const std::string& path, const GlobalFlags& g) {
  const auto log = uitx::read_log_file(path);
  auto pre = uitx::preprocess(log, uitx::EndActionSpec::parse(g.end_action));
  if (g.strict_replay) {
    for (const auto& t : pre.traces) uitx::replay(t, uitx::ReplayMode::Strict);
  }
  return pre;
}

int cmd_preprocess(const GlobalFlags& g, const std::string& input, const std::string& out_path) {
  const auto pre = load(input, g);
  std::vector<uitx::UiAction> filtered;
  for (const auto& t : pre.traces) filtered.insert(filtered.end(), t.actions.begin(), t.actions.end());
  if (!out_path.empty()) write_file(out_path, uitx::serialize_log(filtered));
  const auto report = uitx::segmentation_json(pre);
  if (g.output == "json") {
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << "traces: " << pre.traces.size() << "\nremoved redundant actions: " << pre.removed_actions
              << "\ndropped trailing actions: " << pre.dropped_actions << "\n";
    for (const auto& w : pre.warnings) std::cout << "warning: " << w << "\n";
  }
  return 0;
}

int cmd_discover(const GlobalFlags& g, const std::string& input, const std::string& strategy) {
  const auto options = pipeline_options(g);
  const auto pre = load(input, g);
  const auto report = uitx::discover(uitx::parse_strategy(strategy), pre.traces, options);
  if (g.output == "json") {
    std::cout << uitx::json(report).dump(2) << "\n";
  } else if (g.output == "pseudocode") {
    std::cout << uitx::render_pseudocode(report);
  } else {
    std::cout << uitx::render_table(report);
  }
  return 0;
}

int cmd_bench(const GlobalFlags& g, const std::string& spec_path, const std::string& format,
              const std::string& log_out) {
  const auto options = pipeline_options(g);
  uitx::ScenarioSpec spec;
  if (!spec_path.empty()) {
    try {
      spec = uitx::json::parse(read_file(spec_path)).get<uitx::ScenarioSpec>();
    } catch (const uitx::json::exception& e) {
      throw uitx::Error(uitx::ErrorKind::InvalidArgument, std::string("bad scenario: ") + e.what());
    }
  }
  if (!log_out.empty()) write_file(log_out, uitx::serialize_log(uitx::generate_log(spec)));
  const auto bench = uitx::run_benchmark(spec, options);
  if (g.output == "json") {
    std::cout << uitx::json(bench).dump(2) << "\n";
  } else if (g.output == "pseudocode") {
    for (const auto& r : bench.reports) std::cout << "=== " << uitx::display_name(r.strategy) << "\n" << uitx::render_pseudocode(r);
  } else if (format == "csv") {
    std::cout << uitx::render_benchmark_csv(bench);
  } else {
    std::cout << uitx::render_benchmark_markdown(bench);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Discover data transformations from UI logs of copy-paste routines"};
  app.require_subcommand(1);
  app.fallthrough();
  GlobalFlags g;
  app.add_option("--seed", g.seed, "Seed for picking group representatives");
  app.add_option("--timeout-secs", g.timeout_secs, "Time limit per synthesis call")->check(CLI::PositiveNumber);
  app.add_option("--max-ops", g.max_ops, "Longest program considered")->check(CLI::PositiveNumber);
  app.add_option("--workers", g.workers, "Parallel synthesis tasks")->check(CLI::PositiveNumber);
  app.add_option("--output", g.output, "Output format")->check(CLI::IsMember({"json", "table", "pseudocode"}));
  app.add_option("--mode", g.mode, "Search mode")->check(CLI::IsMember({"exact", "heuristic"}));
  app.add_option("--end-action", g.end_action, "Action closing each task trace, TYPE:FIELD");
  app.add_flag("--strict-replay", g.strict_replay, "Reject traces whose recorded values contradict replay");

  std::string input, out_path, strategy = "opt1opt2", spec_path, format = "markdown", log_out;
  auto* pre = app.add_subcommand("preprocess", "Segment and filter a UI log");
  pre->add_option("log", input, "UI log CSV")->required();
  pre->add_option("--out", out_path, "Write the filtered log here");

  auto* disc = app.add_subcommand("discover", "Discover transformation programs");
  disc->add_option("log", input, "UI log CSV")->required();
  disc->add_option("--strategy", strategy)->check(CLI::IsMember({"baseline", "opt1", "opt1opt2"}));

  auto* bench = app.add_subcommand("bench", "Compare the strategies on a generated log");
  bench->add_option("--spec", spec_path, "Scenario JSON");
  bench->add_option("--format", format)->check(CLI::IsMember({"markdown", "csv"}));
  bench->add_option("--log-out", log_out, "Also write the generated log here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*pre) return cmd_preprocess(g, input, out_path);
    if (*disc) return cmd_discover(g, input, strategy);
    return cmd_bench(g, spec_path, format, log_out);
  } catch (const std::ios_base::failure& e) {
    std::cerr << "uitx: " << e.what() << "\n";
    return kExitIo;
  } catch (const uitx::Error& e) {
    std::cerr << "uitx: " << e.what() << "\n";
    return kExitInput;
  }
}
