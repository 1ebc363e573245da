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

// Discovery strategies over filtered task traces:
//   Baseline  one synthesis call over whole-document examples
//   Opt1      one call per target field
//   Opt1Opt2  per target field, one call per input pattern group on a single
//             representative, verified on the rest of its group

#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <exception>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <span>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "uitx/error.hpp"
#include "uitx/extract.hpp"
#include "uitx/synth.hpp"
#include "uitx/table.hpp"
#include "uitx/tokenize.hpp"
#include "uitx/uilog.hpp"

namespace uitx {

using Millis = std::chrono::duration<double, std::milli>;

enum class Strategy { Baseline, Opt1, Opt1Opt2 };

inline std::string_view to_string(Strategy s) {
  switch (s) {
    case Strategy::Baseline: return "baseline";
    case Strategy::Opt1: return "opt1";
    case Strategy::Opt1Opt2: return "opt1opt2";
  }
  return "unknown";
}

inline Strategy parse_strategy(std::string_view text) {
  if (text == "baseline") return Strategy::Baseline;
  if (text == "opt1") return Strategy::Opt1;
  if (text == "opt1opt2") return Strategy::Opt1Opt2;
  throw Error(ErrorKind::InvalidArgument, "unknown strategy '" + std::string(text) + "'");
}

/// Display name used in comparison tables.
inline std::string_view display_name(Strategy s) {
  switch (s) {
    case Strategy::Baseline: return "Baseline";
    case Strategy::Opt1: return "Opt 1";
    case Strategy::Opt1Opt2: return "Opt 1 + Opt 2";
  }
  return "unknown";
}

struct PipelineOptions {
  SearchBudget budget;
  SearchMode mode = SearchMode::Heuristic;
  std::uint64_t selection_seed = 0;
  std::size_t workers = 1;
  std::chrono::duration<double> group_timeout_floor = std::chrono::seconds(5);
};

// Key used when a target is not split by input pattern.
inline constexpr std::string_view kAllExamplesKey = "*";

struct ProgramEntry {
  std::vector<std::string> keys;
  Program program;

  bool operator==(const ProgramEntry&) const = default;
};

struct GroupFailure {
  std::string key;
  NotFoundReason reason = NotFoundReason::Exhausted;
  std::string detail;

  bool operator==(const GroupFailure&) const = default;
};

struct TargetResult {
  TargetRef target;
  std::vector<ProgramEntry> entries;
  std::vector<GroupFailure> failures;
  std::size_t example_count = 0;
  std::size_t group_count = 0;
  std::size_t fallbacks = 0;  // groups solved only by synthesizing from all members
  std::size_t expansions = 0;
  Millis elapsed{};

  bool discovered() const { return failures.empty() && !entries.empty(); }
};

struct DiscoveryReport {
  Strategy strategy = Strategy::Opt1Opt2;
  std::vector<TargetResult> results;  // Baseline: a single document-level result
  std::size_t target_count = 0;
  std::size_t discovered = 0;
  Millis total_elapsed{};
};

/// Coalesces groups whose programs are the same op sequence, keeping the
/// order in which programs first appear.
inline std::vector<ProgramEntry> merge_groups(std::span<const std::pair<std::string, Program>> results) {
  std::vector<ProgramEntry> merged;
  for (const auto& [key, program] : results) {
    auto it = std::find_if(merged.begin(), merged.end(), [&](const ProgramEntry& e) { return e.program == program; });
    if (it == merged.end()) {
      merged.push_back({{key}, program});
    } else {
      it->keys.push_back(key);
    }
  }
  return merged;
}

namespace detail {

inline Example to_synthesis_example(const TransformationExample& ex) {
  return {Table{ex.input_values()}, Table{ex.output_values()}};
}

inline Example stack_examples(std::span<const TransformationExample> examples) {
  Example stacked;
  for (const auto& ex : examples) {
    stacked.input.rows.push_back(ex.input_values());
    stacked.output.rows.push_back(ex.output_values());
  }
  return stacked;
}

inline bool program_fits(const Program& program, const Example& example) {
  try {
    return run_program(program, example.input) == example.output;
  } catch (const Error&) {
    return false;
  }
}

// Runs synthesize, mapping malformed example sets (e.g. differing input
// counts) to a failed outcome instead of an exception.
inline SynthesisOutcome try_synthesize(std::span<const Example> examples, const SearchBudget& budget, SearchMode mode) {
  try {
    return synthesize(examples, budget, mode);
  } catch (const Error& e) {
    SynthesisOutcome o;
    o.reason = NotFoundReason::Exhausted;
    o.detail = e.what();
    return o;
  }
}

inline std::uint64_t fnv1a(std::string_view s, std::uint64_t h = 0xCBF29CE484222325ULL) {
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001B3ULL;
  }
  return h;
}

// Representative index for a group; depends on the seed and the group only.
inline std::size_t pick_representative(std::uint64_t seed, const TargetRef& target, std::string_view key,
                                       std::size_t size) {
  std::uint64_t h = fnv1a(target.document);
  h = fnv1a(std::string_view("\0", 1), h);
  h = fnv1a(target.field, h);
  h = fnv1a(std::string_view("\0", 1), h);
  h = fnv1a(key, h);
  std::mt19937_64 rng(seed ^ h);
  return static_cast<std::size_t>(rng() % size);
}

// Runs jobs on up to `workers` threads; job i writes only its own slot.
inline void run_parallel(std::size_t count, std::size_t workers, const std::function<void(std::size_t)>& job) {
  workers = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(count, 1));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) job(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(count);
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < count; i = next++) {
          try {
            job(i);
          } catch (...) {
            errors[i] = std::current_exception();
          }
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

inline void finish_report(DiscoveryReport& report, std::chrono::steady_clock::time_point started) {
  if (report.strategy != Strategy::Baseline) {
    report.target_count = report.results.size();
    report.discovered = static_cast<std::size_t>(
        std::count_if(report.results.begin(), report.results.end(), [](const auto& r) { return r.discovered(); }));
  }
  report.total_elapsed = std::chrono::steady_clock::now() - started;
}

inline TargetResult single_call_result(const TargetRef& target, std::span<const TransformationExample> examples,
                                       const PipelineOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  TargetResult r;
  r.target = target;
  r.example_count = examples.size();
  r.group_count = 1;
  std::vector<Example> stacked{stack_examples(examples)};
  SynthesisOutcome outcome = try_synthesize(stacked, options.budget, options.mode);
  r.expansions = outcome.expansions;
  if (outcome.found()) {
    r.entries.push_back({{std::string(kAllExamplesKey)}, *outcome.program});
  } else {
    r.failures.push_back({std::string(kAllExamplesKey), outcome.reason, outcome.detail});
  }
  r.elapsed = std::chrono::steady_clock::now() - started;
  return r;
}

}  // namespace detail

/// Document-level synthesis. Counts as discovering every target field that
/// occurs in the document examples, or none.
inline DiscoveryReport discover_baseline(std::span<const TaskTrace> traces, const PipelineOptions& options = {}) {
  const auto started = std::chrono::steady_clock::now();
  DiscoveryReport report;
  report.strategy = Strategy::Baseline;
  std::vector<TransformationExample> examples;
  std::set<TargetRef> targets;
  for (const auto& t : traces) {
    examples.push_back(build_document_example(t));
    for (const auto& o : examples.back().outputs) targets.insert(o.target);
  }
  report.results.push_back(detail::single_call_result({"Document", std::string(kAllExamplesKey)}, examples, options));
  report.target_count = targets.size();
  report.discovered = report.results.front().discovered() ? targets.size() : 0;
  detail::finish_report(report, started);
  return report;
}

/// One synthesis call per target field over all of its examples.
inline DiscoveryReport discover_by_target(std::span<const TaskTrace> traces, const PipelineOptions& options = {}) {
  const auto started = std::chrono::steady_clock::now();
  DiscoveryReport report;
  report.strategy = Strategy::Opt1;
  const auto per_target = extract_examples_per_target(traces);
  std::vector<std::pair<TargetRef, const std::vector<TransformationExample>*>> jobs;
  for (const auto& [target, examples] : per_target) jobs.emplace_back(target, &examples);
  report.results.resize(jobs.size());
  detail::run_parallel(jobs.size(), options.workers, [&](std::size_t i) {
    report.results[i] = detail::single_call_result(jobs[i].first, *jobs[i].second, options);
  });
  detail::finish_report(report, started);
  return report;
}

/// Opt1Opt2 for the examples of one target.
inline TargetResult discover_target_grouped(const TargetRef& target, std::span<const TransformationExample> examples,
                                            const PipelineOptions& options = {}) {
  const auto started = std::chrono::steady_clock::now();
  TargetResult r;
  r.target = target;
  r.example_count = examples.size();

  std::map<std::string, std::vector<Example>> groups;
  for (const auto& ex : examples) groups[tokenize_inputs(ex)].push_back(detail::to_synthesis_example(ex));
  r.group_count = groups.size();

  SearchBudget budget = options.budget;
  const auto share = options.budget.timeout / static_cast<double>(std::max<std::size_t>(groups.size(), 1));
  budget.timeout = std::min(options.budget.timeout, std::max(share, options.group_timeout_floor));

  std::vector<std::pair<std::string, Program>> found;
  for (const auto& [key, members] : groups) {
    const std::size_t rep = detail::pick_representative(options.selection_seed, target, key, members.size());
    SynthesisOutcome outcome = detail::try_synthesize(std::span(&members[rep], 1), budget, options.mode);
    r.expansions += outcome.expansions;
    if (outcome.found()) {
      const bool fits_all = std::all_of(members.begin(), members.end(),
                                        [&](const Example& e) { return detail::program_fits(*outcome.program, e); });
      if (!fits_all) {
        ++r.fallbacks;
        outcome = detail::try_synthesize(members, budget, options.mode);
        r.expansions += outcome.expansions;
      }
    }
    if (outcome.found()) {
      found.emplace_back(key, *outcome.program);
    } else {
      r.failures.push_back({key, outcome.reason, outcome.detail});
    }
  }
  r.entries = merge_groups(found);
  r.elapsed = std::chrono::steady_clock::now() - started;
  return r;
}

/// Target grouping plus input-pattern grouping.
inline DiscoveryReport discover_grouped(std::span<const TaskTrace> traces, const PipelineOptions& options = {}) {
  const auto started = std::chrono::steady_clock::now();
  DiscoveryReport report;
  report.strategy = Strategy::Opt1Opt2;
  const auto per_target = extract_examples_per_target(traces);
  std::vector<std::pair<TargetRef, const std::vector<TransformationExample>*>> jobs;
  for (const auto& [target, examples] : per_target) jobs.emplace_back(target, &examples);
  report.results.resize(jobs.size());
  detail::run_parallel(jobs.size(), options.workers, [&](std::size_t i) {
    report.results[i] = discover_target_grouped(jobs[i].first, *jobs[i].second, options);
  });
  detail::finish_report(report, started);
  return report;
}

inline DiscoveryReport discover(Strategy strategy, std::span<const TaskTrace> traces,
                                const PipelineOptions& options = {}) {
  switch (strategy) {
    case Strategy::Baseline: return discover_baseline(traces, options);
    case Strategy::Opt1: return discover_by_target(traces, options);
    case Strategy::Opt1Opt2: return discover_grouped(traces, options);
  }
  throw Error(ErrorKind::InvalidArgument, "unknown strategy");
}

/// Parse, segment and filter a log into the traces discovery works on.
struct Preprocessed {
  std::vector<TaskTrace> traces;
  std::size_t dropped_actions = 0;
  std::size_t removed_actions = 0;
  std::vector<std::string> warnings;
};

inline Preprocessed preprocess(std::span<const UiAction> log, const EndActionSpec& end_action = {}) {
  Preprocessed out;
  Segmentation seg = segment(log, end_action);
  out.dropped_actions = seg.dropped_actions;
  out.warnings = std::move(seg.warnings);
  for (const auto& t : seg.traces) {
    out.traces.push_back(filter_trace(t));
    out.removed_actions += t.actions.size() - out.traces.back().actions.size();
  }
  return out;
}

}  // namespace uitx
