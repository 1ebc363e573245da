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

// JSON forms of programs, examples and reports, and the plain-text renderings
// used by the command line.

#pragma once

#include <cstdio>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "uitx/extract.hpp"
#include "uitx/pipeline.hpp"
#include "uitx/synth.hpp"
#include "uitx/table.hpp"

namespace uitx {

using nlohmann::json;

inline NotFoundReason parse_not_found_reason(std::string_view text) {
  for (auto r : {NotFoundReason::Timeout, NotFoundReason::Exhausted, NotFoundReason::AmbiguousOutput}) {
    if (to_string(r) == text) return r;
  }
  throw Error(ErrorKind::InvalidArgument, "unknown reason '" + std::string(text) + "'");
}

// Ops: {"op": "split", "position": 1, "delimiter": "/"}

inline void to_json(json& j, const TransformOp& op) {
  j = json{{"position", op.position}};
  switch (op.kind) {
    case OpKind::JoinChar:
      j["op"] = "join_char";
      j["glue"] = op.text;
      break;
    case OpKind::Split:
      j["op"] = "split";
      j["delimiter"] = op.text;
      break;
    case OpKind::Drop: j["op"] = "drop"; break;
    case OpKind::Replace:
      j["op"] = "replace";
      j["old"] = op.text;
      j["new"] = op.replacement;
      break;
  }
}

inline void from_json(const json& j, TransformOp& op) {
  const auto kind = j.at("op").get<std::string>();
  const auto p = j.at("position").get<std::size_t>();
  if (kind == "join_char") {
    op = TransformOp::join_char(p, j.at("glue").get<std::string>());
  } else if (kind == "split") {
    op = TransformOp::split(p, j.at("delimiter").get<std::string>());
  } else if (kind == "drop") {
    op = TransformOp::drop(p);
  } else if (kind == "replace") {
    op = TransformOp::replace(p, j.at("old").get<std::string>(), j.at("new").get<std::string>());
  } else {
    throw Error(ErrorKind::InvalidArgument, "unknown op '" + kind + "'");
  }
}

inline void to_json(json& j, const Program& p) { j = p.ops; }
inline void from_json(const json& j, Program& p) { p.ops = j.get<std::vector<TransformOp>>(); }

inline void to_json(json& j, const TargetRef& t) { j = json{{"document", t.document}, {"field", t.field}}; }
inline void from_json(const json& j, TargetRef& t) {
  t.document = j.at("document").get<std::string>();
  t.field = j.at("field").get<std::string>();
}

// Examples: per-target examples also carry "target" and "output".
inline void to_json(json& j, const TransformationExample& ex) {
  j = json{{"trace_id", ex.trace_id}, {"inputs", json::array()}, {"outputs", json::array()}};
  for (const auto& in : ex.inputs) {
    j["inputs"].push_back({{"document", in.source.document}, {"locator", in.source.locator}, {"value", in.value}});
  }
  for (const auto& out : ex.outputs) {
    j["outputs"].push_back({{"document", out.target.document}, {"field", out.target.field}, {"value", out.value}});
  }
  if (ex.outputs.size() == 1) {
    j["target"] = ex.outputs.front().target;
    j["output"] = ex.outputs.front().value;
  }
}

inline void from_json(const json& j, TransformationExample& ex) {
  ex.trace_id = j.at("trace_id").get<std::size_t>();
  ex.inputs.clear();
  ex.outputs.clear();
  for (const auto& in : j.at("inputs")) {
    ex.inputs.push_back({{in.at("document").get<std::string>(), in.at("locator").get<std::string>()},
                         in.at("value").get<std::string>()});
  }
  for (const auto& out : j.at("outputs")) {
    ex.outputs.push_back({{out.at("document").get<std::string>(), out.at("field").get<std::string>()},
                          out.at("value").get<std::string>()});
  }
}

inline void to_json(json& j, const ProgramEntry& e) {
  j = json{{"keys", e.keys}, {"program", e.program}, {"pseudocode", pseudocode(e.program)}};
}
inline void from_json(const json& j, ProgramEntry& e) {
  e.keys = j.at("keys").get<std::vector<std::string>>();
  e.program = j.at("program").get<Program>();
}

inline void to_json(json& j, const GroupFailure& f) {
  j = json{{"key", f.key}, {"reason", to_string(f.reason)}, {"detail", f.detail}};
}
inline void from_json(const json& j, GroupFailure& f) {
  f.key = j.at("key").get<std::string>();
  f.reason = parse_not_found_reason(j.at("reason").get<std::string>());
  f.detail = j.at("detail").get<std::string>();
}

inline void to_json(json& j, const TargetResult& r) {
  j = json{{"target", r.target},         {"discovered", r.discovered()}, {"example_count", r.example_count},
           {"group_count", r.group_count}, {"fallbacks", r.fallbacks},     {"expansions", r.expansions},
           {"elapsed_ms", r.elapsed.count()}, {"entries", r.entries},      {"failures", r.failures}};
}
inline void from_json(const json& j, TargetResult& r) {
  r.target = j.at("target").get<TargetRef>();
  r.example_count = j.at("example_count").get<std::size_t>();
  r.group_count = j.at("group_count").get<std::size_t>();
  r.fallbacks = j.at("fallbacks").get<std::size_t>();
  r.expansions = j.at("expansions").get<std::size_t>();
  r.elapsed = Millis(j.at("elapsed_ms").get<double>());
  r.entries = j.at("entries").get<std::vector<ProgramEntry>>();
  r.failures = j.at("failures").get<std::vector<GroupFailure>>();
}

inline void to_json(json& j, const DiscoveryReport& r) {
  j = json{{"strategy", to_string(r.strategy)},
           {"target_count", r.target_count},
           {"discovered", r.discovered},
           {"total_elapsed_ms", r.total_elapsed.count()},
           {"results", r.results}};
}
inline void from_json(const json& j, DiscoveryReport& r) {
  r.strategy = parse_strategy(j.at("strategy").get<std::string>());
  r.target_count = j.at("target_count").get<std::size_t>();
  r.discovered = j.at("discovered").get<std::size_t>();
  r.total_elapsed = Millis(j.at("total_elapsed_ms").get<double>());
  r.results = j.at("results").get<std::vector<TargetResult>>();
}

inline bool operator==(const TargetResult& a, const TargetResult& b) {
  return a.target == b.target && a.entries == b.entries && a.failures == b.failures &&
         a.example_count == b.example_count && a.group_count == b.group_count && a.fallbacks == b.fallbacks &&
         a.expansions == b.expansions && a.elapsed == b.elapsed;
}
inline bool operator==(const DiscoveryReport& a, const DiscoveryReport& b) {
  return a.strategy == b.strategy && a.target_count == b.target_count && a.discovered == b.discovered &&
         a.total_elapsed == b.total_elapsed && a.results == b.results;
}

inline json segmentation_json(const Preprocessed& p) {
  std::size_t actions = 0;
  for (const auto& t : p.traces) actions += t.actions.size();
  return json{{"trace_count", p.traces.size()},
              {"dropped_actions", p.dropped_actions},
              {"removed_actions", p.removed_actions},
              {"remaining_actions", actions},
              {"warnings", p.warnings}};
}

// ---------------------------------------------------------------------------
// Text renderings

namespace detail {

inline std::string seconds_text(Millis ms) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", ms.count() / 1000.0);
  return buf;
}

inline std::string status_text(const TargetResult& r) {
  if (r.discovered()) return "found";
  std::string s;
  for (const auto& f : r.failures) {
    if (!s.empty()) s += ", ";
    s += to_string(f.reason);
  }
  return s.empty() ? "not found" : "N/A (" + s + ")";
}

}  // namespace detail

/// Markdown comparison with one row per strategy.
inline std::string render_comparison(std::span<const DiscoveryReport> reports) {
  std::string out = "| Approach | Execution time (s) | Discovered transformations |\n|---|---|---|\n";
  for (const auto& r : reports) {
    out += "| " + std::string(display_name(r.strategy)) + " | " + detail::seconds_text(r.total_elapsed) + " | " +
           std::to_string(r.discovered) + "/" + std::to_string(r.target_count) + " |\n";
  }
  return out;
}

/// Markdown table of one report, one row per target.
inline std::string render_table(const DiscoveryReport& report) {
  std::string out = "| Target | Examples | Groups | Programs | Time (s) | Status |\n|---|---|---|---|---|---|\n";
  for (const auto& r : report.results) {
    out += "| " + r.target.field + " | " + std::to_string(r.example_count) + " | " + std::to_string(r.group_count) +
           " | " + std::to_string(r.entries.size()) + " | " + detail::seconds_text(r.elapsed) + " | " +
           detail::status_text(r) + " |\n";
  }
  out += "\n" + std::string(display_name(report.strategy)) + ": " + std::to_string(report.discovered) + "/" +
         std::to_string(report.target_count) + " discovered in " + detail::seconds_text(report.total_elapsed) + " s\n";
  return out;
}

/// Programs as pseudocode, one block per target and pattern group.
inline std::string render_pseudocode(const DiscoveryReport& report) {
  std::string out;
  for (const auto& r : report.results) {
    out += "# " + r.target.document + " / " + r.target.field + "\n";
    for (const auto& e : r.entries) {
      for (const auto& k : e.keys) out += "## pattern: " + printable_key(k) + "\n";
      for (const auto& line : pseudocode(e.program)) out += line + "\n";
    }
    for (const auto& f : r.failures) {
      out += "## pattern: " + printable_key(f.key) + "\n# not found: " + std::string(to_string(f.reason));
      if (!f.detail.empty()) out += " (" + f.detail + ")";
      out += "\n";
    }
    out += "\n";
  }
  return out;
}

}  // namespace uitx
