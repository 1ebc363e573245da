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

// Program synthesis from input/output tables by A* search over column
// operators. All examples advance in lockstep: one op sequence has to turn
// every input table into its output table, every op costs 1.
//
// The search works on a column-major copy of the stacked example rows whose
// columns are shared between parent and child states, so an op only
// allocates the columns it rewrites.

#pragma once

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <queue>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "uitx/error.hpp"
#include "uitx/table.hpp"

namespace uitx {

struct Example {
  Table input;
  Table output;

  bool operator==(const Example&) const = default;
};

struct SearchBudget {
  std::size_t max_ops = 6;
  std::chrono::duration<double> timeout = std::chrono::seconds(60);
  std::size_t max_expansions = 2'000'000;
  std::optional<std::size_t> beam_width;

  void validate() const {
    if (max_ops == 0 || timeout.count() <= 0 || max_expansions == 0 || (beam_width && *beam_width == 0)) {
      throw Error(ErrorKind::InvalidArgument, "search budget values must be positive");
    }
  }
};

enum class SearchMode {
  Exact,      // h = 0: uniform-cost search, shortest program
  Heuristic,  // guided by heuristic_cost; not admissible in general
};

enum class NotFoundReason { Timeout, Exhausted, AmbiguousOutput };

inline std::string_view to_string(NotFoundReason r) {
  switch (r) {
    case NotFoundReason::Timeout: return "Timeout";
    case NotFoundReason::Exhausted: return "Exhausted";
    case NotFoundReason::AmbiguousOutput: return "AmbiguousOutput";
  }
  return "Unknown";
}

inline std::string_view to_string(SearchMode m) { return m == SearchMode::Exact ? "exact" : "heuristic"; }

struct SynthesisOutcome {
  std::optional<Program> program;  // engaged iff a verified program was found
  NotFoundReason reason = NotFoundReason::Exhausted;
  std::size_t expansions = 0;
  std::chrono::duration<double, std::milli> elapsed{};
  std::string detail;

  bool found() const { return program.has_value(); }
  std::size_t cost() const { return program ? program->size() : 0; }
};

namespace detail {

struct Hash128 {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  bool operator==(const Hash128&) const = default;
};

struct Hash128Hasher {
  std::size_t operator()(const Hash128& h) const noexcept {
    return static_cast<std::size_t>(h.a ^ (h.b * 0x9E3779B97F4A7C15ULL));
  }
};

inline std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ULL;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBULL;
  x ^= x >> 31;
  return x;
}

inline std::uint64_t hash_bytes(std::string_view s, std::uint64_t seed) {
  std::uint64_t h = 0xCBF29CE484222325ULL ^ seed;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001B3ULL;
  }
  return mix64(h ^ (s.size() * 0x9E3779B97F4A7C15ULL));
}

inline void combine(Hash128& h, std::uint64_t a, std::uint64_t b) {
  h.a = mix64(h.a * 31 + a);
  h.b = mix64(h.b * 37 + b);
}

struct Column {
  std::vector<std::string> cells;  // one per stacked row
  Hash128 hash;

  explicit Column(std::vector<std::string> c) : cells(std::move(c)) {
    hash = {0x1234, 0x5678};
    for (const auto& s : cells) combine(hash, hash_bytes(s, 0x51ED), hash_bytes(s, 0xA7E5));
  }
};

using ColumnPtr = std::shared_ptr<const Column>;

// Stacked rows of every example, column-major. The hash covers the column
// count and every cell, so equal hashes stand for equal states.
struct State {
  std::vector<ColumnPtr> columns;
  std::size_t rows = 0;
  Hash128 hash;

  void rehash() {
    hash = {columns.size(), rows};
    for (const auto& c : columns) combine(hash, c->hash.a, c->hash.b);
  }

  const std::string& cell(std::size_t r, std::size_t c) const { return columns[c]->cells[r]; }

  bool same_cells(const State& o) const {
    if (columns.size() != o.columns.size() || rows != o.rows) return false;
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (columns[c] != o.columns[c] && columns[c]->cells != o.columns[c]->cells) return false;
    }
    return true;
  }
};

inline State stack(std::span<const Table> tables) {
  State s;
  const std::size_t cols = tables.empty() ? 0 : tables.front().column_count();
  std::vector<std::vector<std::string>> columns(cols);
  for (const auto& t : tables) {
    for (const auto& r : t.rows) {
      for (std::size_t c = 0; c < cols; ++c) columns[c].push_back(r[c]);
      ++s.rows;
    }
  }
  for (auto& c : columns) s.columns.push_back(std::make_shared<const Column>(std::move(c)));
  s.rehash();
  return s;
}

// What the goal contributes to successor generation and pruning.
struct GoalInfo {
  std::vector<std::string> separators;  // separator bytes and maximal separator runs of goal cells
  std::vector<std::string> glues;       // fixed glue set followed by the remaining goal separators
  std::vector<std::string> alnum_rows;  // non-separator bytes of each goal row, in order
};

inline const std::vector<std::string>& default_glues() {
  static const std::vector<std::string> glues{"", " ", "-", "/", ".", ",", ", "};
  return glues;
}

inline GoalInfo analyze_goal(const State& goal) {
  GoalInfo info;
  std::set<std::string> seps;
  info.alnum_rows.resize(goal.rows);
  for (std::size_t r = 0; r < goal.rows; ++r) {
    for (std::size_t c = 0; c < goal.columns.size(); ++c) {
      const std::string& s = goal.cell(r, c);
      std::string run;
      for (char ch : s) {
        if (is_separator(ch)) {
          seps.insert(std::string(1, ch));
          run.push_back(ch);
        } else {
          info.alnum_rows[r].push_back(ch);
          if (!run.empty()) seps.insert(run);
          run.clear();
        }
      }
      if (!run.empty()) seps.insert(run);
    }
  }
  info.separators.assign(seps.begin(), seps.end());
  info.glues = default_glues();
  for (const auto& s : info.separators) {
    if (std::find(info.glues.begin(), info.glues.end(), s) == info.glues.end()) info.glues.push_back(s);
  }
  return info;
}

inline bool uniform_count(const std::vector<std::string>& cells, std::string_view needle) {
  const std::size_t first = count_occurrences(cells.front(), needle);
  if (first == 0) return false;
  for (const auto& s : cells) {
    if (count_occurrences(s, needle) != first) return false;
  }
  return true;
}

/// Candidate ops for a state, in a fixed order: drops, replaces, splits, joins.
inline std::vector<TransformOp> candidate_ops(const State& state, const GoalInfo& goal) {
  std::vector<TransformOp> ops;
  const std::size_t cols = state.columns.size();
  if (cols == 0 || state.rows == 0) return ops;
  if (cols > 1) {
    for (std::size_t p = 0; p < cols; ++p) ops.push_back(TransformOp::drop(p));
  }
  std::vector<std::set<std::string>> singles(cols), pairs(cols);
  for (std::size_t p = 0; p < cols; ++p) {
    for (const auto& s : state.columns[p]->cells) {
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (!is_separator(s[i])) continue;
        singles[p].insert(std::string(1, s[i]));
        if (i + 1 < s.size() && is_separator(s[i + 1])) pairs[p].insert(s.substr(i, 2));
      }
    }
  }
  for (std::size_t p = 0; p < cols; ++p) {
    for (const auto& from : singles[p]) {
      for (const auto& to : goal.separators) {
        if (to != from) ops.push_back(TransformOp::replace(p, from, to));
      }
    }
  }
  for (std::size_t p = 0; p < cols; ++p) {
    const auto& cells = state.columns[p]->cells;
    for (const auto* set : {&singles[p], &pairs[p]}) {
      for (const auto& d : *set) {
        if (uniform_count(cells, d)) ops.push_back(TransformOp::split(p, d));
      }
    }
  }
  for (std::size_t p = 0; p + 1 < cols; ++p) {
    for (const auto& g : goal.glues) ops.push_back(TransformOp::join_char(p, g));
  }
  return ops;
}

// Candidate ops are valid by construction, so no checks here.
inline State apply_to_state(const State& s, const TransformOp& op) {
  State out;
  out.rows = s.rows;
  const std::size_t p = op.position;
  out.columns.reserve(s.columns.size() + 2);
  out.columns.assign(s.columns.begin(), s.columns.begin() + static_cast<std::ptrdiff_t>(p));
  const auto& cells = s.columns[p]->cells;
  switch (op.kind) {
    case OpKind::Drop:
      out.columns.insert(out.columns.end(), s.columns.begin() + static_cast<std::ptrdiff_t>(p + 1), s.columns.end());
      break;
    case OpKind::Replace: {
      std::vector<std::string> nc;
      nc.reserve(s.rows);
      for (const auto& c : cells) nc.push_back(replace_all(c, op.text, op.replacement));
      out.columns.push_back(std::make_shared<const Column>(std::move(nc)));
      out.columns.insert(out.columns.end(), s.columns.begin() + static_cast<std::ptrdiff_t>(p + 1), s.columns.end());
      break;
    }
    case OpKind::Split: {
      std::vector<std::vector<std::string>> parts;
      for (std::size_t r = 0; r < s.rows; ++r) {
        auto pieces = split_all(cells[r], op.text);
        if (parts.empty()) parts.resize(pieces.size());
        for (std::size_t k = 0; k < pieces.size(); ++k) parts[k].push_back(std::move(pieces[k]));
      }
      for (auto& col : parts) out.columns.push_back(std::make_shared<const Column>(std::move(col)));
      out.columns.insert(out.columns.end(), s.columns.begin() + static_cast<std::ptrdiff_t>(p + 1), s.columns.end());
      break;
    }
    case OpKind::JoinChar: {
      const auto& next = s.columns[p + 1]->cells;
      std::vector<std::string> nc;
      nc.reserve(s.rows);
      for (std::size_t r = 0; r < s.rows; ++r) nc.push_back(cells[r] + op.text + next[r]);
      out.columns.push_back(std::make_shared<const Column>(std::move(nc)));
      out.columns.insert(out.columns.end(), s.columns.begin() + static_cast<std::ptrdiff_t>(p + 2), s.columns.end());
      break;
    }
  }
  out.rehash();
  return out;
}

// Ops never create letters or digits and never reorder content, so the
// goal's letters and digits must stay a subsequence of the state's.
inline bool goal_still_reachable(const State& s, const GoalInfo& goal) {
  for (std::size_t r = 0; r < s.rows; ++r) {
    const std::string& need = goal.alnum_rows[r];
    std::size_t k = 0;
    for (std::size_t c = 0; c < s.columns.size() && k < need.size(); ++c) {
      for (char ch : s.cell(r, c)) {
        if (k < need.size() && ch == need[k]) ++k;
      }
    }
    if (k < need.size()) return false;
  }
  return true;
}

// Sum over rows of max(goal-cell score, surplus columns), where a goal cell
// scores 0 when some state cell equals it, 1 when it occurs in the state
// cells joined by spaces and 2 otherwise. Equals 0 only for the goal itself.
inline std::size_t guide_cost_raw(const State& s, const State& goal) {
  std::size_t raw = 0;
  const std::size_t cols = s.columns.size();
  const std::size_t goal_cols = goal.columns.size();
  std::string joined;
  for (std::size_t r = 0; r < s.rows; ++r) {
    joined.clear();
    for (std::size_t c = 0; c < cols; ++c) {
      if (c) joined.push_back(' ');
      joined += s.cell(r, c);
    }
    std::size_t score = 0;
    for (std::size_t g = 0; g < goal_cols; ++g) {
      const std::string& want = goal.cell(r, g);
      bool verbatim = false;
      for (std::size_t c = 0; c < cols && !verbatim; ++c) verbatim = s.cell(r, c) == want;
      if (verbatim) continue;
      score += joined.find(want) != std::string::npos ? 1 : 2;
    }
    const std::size_t surplus = cols > goal_cols ? cols - goal_cols : 0;
    raw += std::max(score, surplus);
  }
  if (raw == 0 && !s.same_cells(goal)) raw = s.rows;
  return raw;
}

inline void check_examples(std::span<const Example> examples) {
  if (examples.empty()) throw Error(ErrorKind::InvalidArgument, "no examples");
  const std::size_t in_cols = examples.front().input.column_count();
  const std::size_t out_cols = examples.front().output.column_count();
  for (std::size_t i = 0; i < examples.size(); ++i) {
    const auto& e = examples[i];
    const std::string which = "example " + std::to_string(i);
    if (e.input.row_count() == 0 || e.input.row_count() != e.output.row_count()) {
      throw Error(ErrorKind::InvalidArgument, which + ": input and output need the same, non-zero row count");
    }
    if (!e.input.rectangular() || !e.output.rectangular()) {
      throw Error(ErrorKind::InvalidArgument, which + ": table is not rectangular");
    }
    if (e.input.column_count() != in_cols || e.output.column_count() != out_cols || in_cols == 0 || out_cols == 0) {
      throw Error(ErrorKind::InvalidArgument, which + ": column counts differ between examples");
    }
  }
}

}  // namespace detail

/// Guide value h(state) in units of ops: the raw score divided by the number
/// of cells one op can change (one per stacked row).
inline double heuristic_cost(std::span<const Table> state, std::span<const Table> goal) {
  const auto s = detail::stack(state);
  const auto g = detail::stack(goal);
  if (s.rows == 0) return 0.0;
  if (s.rows != g.rows) throw Error(ErrorKind::InvalidArgument, "state and goal row counts differ");
  return static_cast<double>(detail::guide_cost_raw(s, g)) / static_cast<double>(s.rows);
}

struct Successor {
  TransformOp op;
  std::vector<Table> state;
};

/// One successor per distinct reachable state, using apply_op on every table.
inline std::vector<Successor> enumerate_successors(std::span<const Table> state, std::span<const Table> goal) {
  const auto stacked = detail::stack(state);
  const auto info = detail::analyze_goal(detail::stack(goal));
  std::vector<Successor> out;
  std::unordered_set<detail::Hash128, detail::Hash128Hasher> seen{stacked.hash};
  for (const auto& op : detail::candidate_ops(stacked, info)) {
    Successor succ{op, {}};
    for (const auto& t : state) succ.state.push_back(apply_op(t, op));
    if (!seen.insert(detail::stack(succ.state).hash).second) continue;
    out.push_back(std::move(succ));
  }
  return out;
}

/// Detects outputs whose origin the examples leave open: the same output
/// value in two rows whose inputs differ and both contain that value. The
/// examples then do not say which input a value was taken from.
inline std::optional<std::string> find_ambiguous_output(std::span<const Example> examples) {
  std::vector<const Row*> inputs, outputs;
  for (const auto& e : examples) {
    for (const auto& r : e.input.rows) inputs.push_back(&r);
    for (const auto& r : e.output.rows) outputs.push_back(&r);
  }
  const std::size_t out_cols = outputs.empty() ? 0 : outputs.front()->size();
  for (std::size_t c = 0; c < out_cols; ++c) {
    std::map<std::string_view, std::vector<std::size_t>> by_value;
    for (std::size_t r = 0; r < outputs.size(); ++r) {
      if (!(*outputs[r])[c].empty()) by_value[(*outputs[r])[c]].push_back(r);
    }
    for (const auto& [value, rows] : by_value) {
      if (rows.size() < 2) continue;
      std::vector<const Row*> origins;
      for (std::size_t r : rows) {
        const Row& in = *inputs[r];
        bool contains = std::any_of(in.begin(), in.end(),
                                    [&](const std::string& cell) { return cell.find(value) != std::string::npos; });
        if (!contains) continue;
        if (std::none_of(origins.begin(), origins.end(), [&](const Row* o) { return *o == in; })) {
          origins.push_back(&in);
        }
      }
      if (origins.size() >= 2) {
        return "output '" + std::string(value) + "' (column " + std::to_string(c) + ") occurs in " +
               std::to_string(origins.size()) + " different inputs";
      }
    }
  }
  return std::nullopt;
}

/// A* over lockstep states. Nodes are ordered by (f, deeper first,
/// insertion order); goals are detected when generated.
inline SynthesisOutcome synthesize(std::span<const Example> examples, const SearchBudget& budget = {},
                                   SearchMode mode = SearchMode::Heuristic) {
  using clock = std::chrono::steady_clock;
  budget.validate();
  detail::check_examples(examples);
  const auto started = clock::now();
  const auto deadline = started + std::chrono::duration_cast<clock::duration>(budget.timeout);

  std::vector<Table> inputs, outputs;
  for (const auto& e : examples) {
    inputs.push_back(e.input);
    outputs.push_back(e.output);
  }
  const detail::State start = detail::stack(inputs);
  const detail::State goal = detail::stack(outputs);
  const detail::GoalInfo info = detail::analyze_goal(goal);
  const std::size_t rows = start.rows;

  SynthesisOutcome outcome;
  auto finish = [&](SynthesisOutcome& o) -> SynthesisOutcome {
    o.elapsed = clock::now() - started;
    return std::move(o);
  };

  if (start.same_cells(goal)) {
    outcome.program = Program{};
    return finish(outcome);
  }
  if (auto why = find_ambiguous_output(examples)) {
    outcome.reason = NotFoundReason::AmbiguousOutput;
    outcome.detail = *why;
    return finish(outcome);
  }

  struct Node {
    detail::State state;
    std::size_t parent;
    TransformOp op;
    std::size_t g;
  };
  struct Entry {
    std::size_t f;  // g * rows + raw guide value
    std::size_t g;
    std::size_t seq;
    std::size_t node;
  };
  struct Worse {
    bool operator()(const Entry& a, const Entry& b) const {
      if (a.f != b.f) return a.f > b.f;
      if (a.g != b.g) return a.g < b.g;
      return a.seq > b.seq;
    }
  };

  std::vector<Node> nodes;
  std::priority_queue<Entry, std::vector<Entry>, Worse> open;
  std::unordered_set<detail::Hash128, detail::Hash128Hasher> seen;
  std::size_t seq = 0;
  auto raw_h = [&](const detail::State& s) -> std::size_t {
    return mode == SearchMode::Exact ? 0 : detail::guide_cost_raw(s, goal);
  };

  nodes.push_back({start, 0, {}, 0});
  seen.insert(start.hash);
  open.push({raw_h(start), 0, seq++, 0});

  auto path_to = [&](std::size_t idx, const TransformOp& last) {
    Program p;
    p.ops.push_back(last);
    for (std::size_t i = idx; i != 0; i = nodes[i].parent) p.ops.push_back(nodes[i].op);
    std::reverse(p.ops.begin(), p.ops.end());
    return p;
  };

  struct Child {
    TransformOp op;
    detail::State state;
    std::size_t h;
  };
  std::vector<Child> children;

  while (!open.empty()) {
    if (outcome.expansions >= budget.max_expansions ||
        ((outcome.expansions & 15) == 0 && clock::now() >= deadline)) {
      outcome.reason = NotFoundReason::Timeout;
      outcome.detail = outcome.expansions >= budget.max_expansions ? "expansion limit reached" : "time limit reached";
      return finish(outcome);
    }
    const Entry top = open.top();
    open.pop();
    ++outcome.expansions;
    if (top.g >= budget.max_ops) continue;

    children.clear();
    const detail::State& current = nodes[top.node].state;
    for (const auto& op : detail::candidate_ops(current, info)) {
      detail::State next = detail::apply_to_state(current, op);
      if (!seen.insert(next.hash).second) continue;
      if (next.same_cells(goal)) {
        Program program = path_to(top.node, op);
        for (const auto& e : examples) {
          if (run_program(program, e.input) != e.output) {
            throw std::logic_error("synthesized program failed verification");
          }
        }
        outcome.program = std::move(program);
        return finish(outcome);
      }
      if (!detail::goal_still_reachable(next, info)) continue;
      if (top.g + 1 >= budget.max_ops) continue;  // cannot reach the goal from here within budget
      const std::size_t h = raw_h(next);
      children.push_back({op, std::move(next), h});
    }
    if (budget.beam_width && children.size() > *budget.beam_width) {
      std::stable_sort(children.begin(), children.end(), [](const Child& a, const Child& b) { return a.h < b.h; });
      children.resize(*budget.beam_width);
    }
    for (auto& c : children) {
      const std::size_t g = top.g + 1;
      nodes.push_back({std::move(c.state), top.node, std::move(c.op), g});
      open.push({g * rows + c.h, g, seq++, nodes.size() - 1});
    }
  }
  outcome.reason = NotFoundReason::Exhausted;
  outcome.detail = "no program of at most " + std::to_string(budget.max_ops) + " ops";
  return finish(outcome);
}

}  // namespace uitx
