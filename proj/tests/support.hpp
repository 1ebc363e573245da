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

// Shared fixtures, random generators and brute-force oracles for tests.

#pragma once

#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "uitx/extract.hpp"
#include "uitx/synth.hpp"
#include "uitx/table.hpp"
#include "uitx/uilog.hpp"

namespace uitx::testing {

inline std::string fixture_path(const std::string& name) { return std::string(UITX_FIXTURES) + "/" + name; }

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(fixture_path(name), std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline std::vector<UiAction> table1_log() { return parse_log(read_fixture("table1.csv")); }

inline TaskTrace table1_trace() { return segment(table1_log()).traces.front(); }

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : rng_(seed) {}
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }
  bool coin(unsigned percent = 50) { return below(100) < percent; }
  template <class C>
  const auto& pick(const C& c) {
    return c[below(c.size())];
  }
  std::string word(std::size_t max_len = 4) {
    static constexpr std::string_view kChars = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJ0123456789";
    std::string w;
    const std::size_t n = 1 + below(max_len);
    for (std::size_t i = 0; i < n; ++i) w.push_back(kChars[below(kChars.size())]);
    return w;
  }

 private:
  std::mt19937_64 rng_;
};

// One trace assembled from small action builders.
class TraceBuilder {
 public:
  TraceBuilder& copy(const std::string& cell, const std::string& value) {
    return add(ActionKind::CopyCell, AppKind::Worksheet, value, cell, value);
  }
  TraceBuilder& click(const std::string& field, const std::string& value = "", AppKind app = AppKind::Web) {
    return add(ActionKind::ClickField, app, std::nullopt, field, value);
  }
  TraceBuilder& paste(const std::string& field, const std::string& value, const std::string& before = "") {
    return add(ActionKind::Paste, AppKind::Web, value, field, before);
  }
  TraceBuilder& edit(const std::string& field, const std::string& value) {
    return add(ActionKind::EditField, AppKind::Web, std::nullopt, field, value);
  }
  // Copy, click, paste and edit one field.
  TraceBuilder& transfer(const std::string& cell, const std::string& input, const std::string& field,
                         const std::string& output) {
    return copy(cell, input).click(field).paste(field, input).edit(field, output);
  }
  TraceBuilder& submit() { return add(ActionKind::ClickButton, AppKind::Web, std::nullopt, "Submit", ""); }
  TraceBuilder& add(ActionKind kind, AppKind app, std::optional<std::string> content, const std::string& name,
                    const std::string& value) {
    UiAction a;
    a.timestamp = Timestamp{} + std::chrono::seconds(trace_.actions.size());
    a.action_type = kind;
    a.source = app;
    a.content = std::move(content);
    a.field_name = name;
    a.field_value = value;
    trace_.actions.push_back(std::move(a));
    return *this;
  }
  TaskTrace build(std::size_t id = 0) {
    trace_.trace_id = id;
    return trace_;
  }

 private:
  TaskTrace trace_;
};

/// Random trace mixing regular copy-paste-edit transfers, the redundancy
/// patterns the filter targets and arbitrary stray actions.
inline TaskTrace random_trace(Rng& rng) {
  static const std::vector<std::string> kCells{"A1", "B1", "C1", "D1"};
  static const std::vector<std::string> kFields{"Name", "Date", "City", "Zip"};
  TraceBuilder b;
  std::map<std::string, std::string> form;
  const std::size_t steps = 1 + rng.below(6);
  for (std::size_t s = 0; s < steps; ++s) {
    const std::string& cell = rng.pick(kCells);
    const std::string& field = rng.pick(kFields);
    const std::string value = rng.word(6);
    if (rng.coin(30)) b.copy(rng.pick(kCells), rng.word());  // extra copy
    b.copy(cell, value);
    if (rng.coin(20)) b.click(rng.pick(kCells), "", AppKind::Worksheet);  // navigation
    if (rng.coin(20)) b.click(field, form[field]);                        // double click
    b.click(field, form[field]);
    b.paste(field, value, form[field]);
    if (rng.coin(30)) b.edit(field, rng.word());  // overwritten edit
    const std::string final_value = rng.coin(50) ? value : value + "-" + rng.word(2);
    b.edit(field, final_value);
    form[field] = final_value;
    // stray actions at arbitrary points
    const std::size_t strays = rng.below(3);
    for (std::size_t k = 0; k < strays; ++k) {
      switch (rng.below(5)) {
        case 0: b.click(rng.pick(kCells), "", AppKind::Worksheet); break;
        case 1: b.click(rng.pick(kFields), ""); break;
        case 2: {
          const std::string& f = rng.pick(kFields);
          b.edit(f, rng.word());
          form[f] = "?";
          break;
        }
        case 3: b.copy(rng.pick(kCells), rng.word()); break;
        case 4: b.add(ActionKind::ClickCheckBox, AppKind::Web, std::nullopt, "Flag", "FALSE"); break;
      }
    }
  }
  return b.submit().build();
}

/// Fewest ops that turn every input into its output, by breadth-first search
/// over enumerate_successors; nullopt when more than `max_depth` are needed.
inline std::optional<std::size_t> bfs_min_cost(const std::vector<Example>& examples, std::size_t max_depth) {
  std::vector<Table> start, goal;
  for (const auto& e : examples) {
    start.push_back(e.input);
    goal.push_back(e.output);
  }
  if (start == goal) return 0;
  auto key = [](const std::vector<Table>& tables) {
    std::string k;
    for (const auto& t : tables) {
      for (const auto& r : t.rows) {
        for (const auto& c : r) k += c + '\x1F';
        k += '\x1E';
      }
      k += '\x1D';
    }
    return k;
  };
  std::unordered_set<std::string> seen{key(start)};
  std::vector<std::vector<Table>> level{start};
  for (std::size_t depth = 1; depth <= max_depth; ++depth) {
    std::vector<std::vector<Table>> next;
    for (const auto& state : level) {
      for (auto& succ : enumerate_successors(state, goal)) {
        if (succ.state == goal) return depth;
        if (seen.insert(key(succ.state)).second) next.push_back(std::move(succ.state));
      }
    }
    level = std::move(next);
  }
  return std::nullopt;
}

/// Random toy instance: rows share a separator skeleton, a random program of
/// up to three ops produces the outputs.
struct ToyInstance {
  std::vector<Example> examples;
  Program truth;
};

inline std::optional<TransformOp> random_op(Rng& rng, const Table& t) {
  static const std::vector<std::string> kGlues{"", " ", "-", "/", ".", ",", ", "};
  static const std::vector<std::string> kReplacements{"-", "/", " ", "."};
  const std::size_t cols = t.column_count();
  const std::size_t p = rng.below(cols);
  switch (rng.below(4)) {
    case 0:
      if (cols < 2) return std::nullopt;
      return TransformOp::drop(p);
    case 1:
      if (p + 1 >= cols) return std::nullopt;
      return TransformOp::join_char(p, rng.pick(kGlues));
    case 2:
    case 3: {
      std::vector<std::string> seps;
      for (char c : t.rows.front()[p]) {
        if (detail::is_separator(c)) seps.emplace_back(1, c);
      }
      if (seps.empty()) return std::nullopt;
      const std::string d = rng.pick(seps);
      if (rng.coin()) return TransformOp::split(p, d);
      std::string b = rng.pick(kReplacements);
      if (b == d) return std::nullopt;
      return TransformOp::replace(p, d, b);
    }
  }
  return std::nullopt;
}

inline ToyInstance random_toy_instance(Rng& rng) {
  static const std::vector<std::string> kSeps{" ", "-", "/", ",", ", ", "."};
  const std::size_t rows = 1 + rng.below(3);
  const std::size_t cols = 1 + rng.below(2);
  std::vector<std::vector<std::string>> skeleton(cols);
  for (auto& s : skeleton) {
    const std::size_t parts = 1 + rng.below(3);
    for (std::size_t i = 0; i + 1 < parts; ++i) s.push_back(rng.pick(kSeps));
  }
  Table input;
  for (std::size_t r = 0; r < rows; ++r) {
    Row row;
    for (const auto& s : skeleton) {
      std::string cell = rng.word();
      for (const auto& sep : s) cell += sep + rng.word();
      row.push_back(cell);
    }
    input.rows.push_back(row);
  }
  ToyInstance inst;
  Table t = input;
  const std::size_t length = 1 + rng.below(3);
  for (std::size_t attempts = 0; inst.truth.size() < length && attempts < 20; ++attempts) {
    auto op = random_op(rng, t);
    if (!op) continue;
    try {
      t = apply_op(t, *op);
      inst.truth.ops.push_back(*op);
    } catch (const Error&) {
    }
  }
  // Rows become separate examples half of the time; lockstep treats both alike.
  if (rng.coin()) {
    Table out = run_program(inst.truth, input);
    for (std::size_t r = 0; r < rows; ++r) inst.examples.push_back({Table{input.rows[r]}, Table{out.rows[r]}});
  } else {
    inst.examples.push_back({input, run_program(inst.truth, input)});
  }
  return inst;
}

}  // namespace uitx::testing
