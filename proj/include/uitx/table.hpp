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

// Tables of strings and the column operators programs are built from.

#pragma once

#include <cctype>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "uitx/error.hpp"

namespace uitx {

using Row = std::vector<std::string>;

struct Table {
  std::vector<Row> rows;

  Table() = default;
  Table(std::initializer_list<Row> init) : rows(init) {}
  explicit Table(std::vector<Row> r) : rows(std::move(r)) {}

  std::size_t row_count() const { return rows.size(); }
  std::size_t column_count() const { return rows.empty() ? 0 : rows.front().size(); }
  bool rectangular() const {
    for (const auto& r : rows) {
      if (r.size() != column_count()) return false;
    }
    return true;
  }

  bool operator==(const Table&) const = default;
};

enum class OpKind { JoinChar, Split, Drop, Replace };

/// Column operator. Positions are 0-based column indices.
struct TransformOp {
  OpKind kind = OpKind::Drop;
  std::size_t position = 0;
  std::string text;         // JoinChar: glue; Split: delimiter; Replace: old text
  std::string replacement;  // Replace only

  static TransformOp join_char(std::size_t p, std::string glue) { return {OpKind::JoinChar, p, std::move(glue), {}}; }
  static TransformOp split(std::size_t p, std::string delimiter) { return {OpKind::Split, p, std::move(delimiter), {}}; }
  static TransformOp drop(std::size_t p) { return {OpKind::Drop, p, {}, {}}; }
  static TransformOp replace(std::size_t p, std::string from, std::string to) {
    return {OpKind::Replace, p, std::move(from), std::move(to)};
  }

  bool operator==(const TransformOp&) const = default;
};

struct Program {
  std::vector<TransformOp> ops;

  std::size_t size() const { return ops.size(); }
  bool empty() const { return ops.empty(); }

  bool operator==(const Program&) const = default;
};

namespace detail {

// ASCII punctuation, spaces and control characters. Bytes of multi-byte UTF-8
// sequences are never separators, so no operator cuts inside a code point.
inline bool is_separator(char c) {
  auto u = static_cast<unsigned char>(c);
  return u < 0x80 && !std::isalnum(u);
}

inline std::size_t count_occurrences(std::string_view hay, std::string_view needle) {
  std::size_t n = 0;
  for (std::size_t pos = hay.find(needle); pos != std::string_view::npos; pos = hay.find(needle, pos + needle.size())) {
    ++n;
  }
  return n;
}

inline std::vector<std::string> split_all(std::string_view s, std::string_view delimiter) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (std::size_t pos = s.find(delimiter); pos != std::string_view::npos; pos = s.find(delimiter, start)) {
    parts.emplace_back(s.substr(start, pos - start));
    start = pos + delimiter.size();
  }
  parts.emplace_back(s.substr(start));
  return parts;
}

inline std::string replace_all(std::string_view s, std::string_view from, std::string_view to) {
  std::string out;
  std::size_t start = 0;
  for (std::size_t pos = s.find(from); pos != std::string_view::npos; pos = s.find(from, start)) {
    out.append(s.substr(start, pos - start));
    out.append(to);
    start = pos + from.size();
  }
  out.append(s.substr(start));
  return out;
}

inline std::string quote(std::string_view s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('\'');
  return out;
}

}  // namespace detail

/// Checks the op against a table of `columns` columns (content checks such as
/// split uniformity are left to apply_op).
inline void check_position(const TransformOp& op, std::size_t columns) {
  auto fail = [&](const std::string& why) {
    throw Error(ErrorKind::PositionOutOfRange,
                "position " + std::to_string(op.position) + " " + why + " (" + std::to_string(columns) + " columns)");
  };
  if (op.position >= columns) fail("is past the last column");
  if (op.kind == OpKind::JoinChar && op.position + 1 >= columns) fail("has no successor column to join");
  if (op.kind == OpKind::Drop && columns == 1) fail("would leave zero columns");
  if ((op.kind == OpKind::Split || op.kind == OpKind::Replace) && op.text.empty()) {
    throw Error(ErrorKind::EmptyDelimiter, "empty pattern");
  }
}

inline Table apply_op(const Table& table, const TransformOp& op) {
  if (!table.rectangular()) throw Error(ErrorKind::InvalidArgument, "table is not rectangular");
  check_position(op, table.column_count());
  const std::size_t p = op.position;
  Table out;
  out.rows.reserve(table.rows.size());
  switch (op.kind) {
    case OpKind::JoinChar:
      for (const auto& r : table.rows) {
        Row nr(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(p));
        nr.push_back(r[p] + op.text + r[p + 1]);
        nr.insert(nr.end(), r.begin() + static_cast<std::ptrdiff_t>(p + 2), r.end());
        out.rows.push_back(std::move(nr));
      }
      break;
    case OpKind::Split: {
      std::size_t expected = 0;
      for (std::size_t i = 0; i < table.rows.size(); ++i) {
        std::size_t n = detail::count_occurrences(table.rows[i][p], op.text);
        if (i == 0) expected = n;
        if (n != expected) {
          throw Error(ErrorKind::RaggedSplit, detail::quote(op.text) + " occurs " + std::to_string(expected) +
                                                  " times in row 0 but " + std::to_string(n) + " times in row " +
                                                  std::to_string(i));
        }
      }
      for (const auto& r : table.rows) {
        Row nr(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(p));
        for (auto& part : detail::split_all(r[p], op.text)) nr.push_back(std::move(part));
        nr.insert(nr.end(), r.begin() + static_cast<std::ptrdiff_t>(p + 1), r.end());
        out.rows.push_back(std::move(nr));
      }
      break;
    }
    case OpKind::Drop:
      for (const auto& r : table.rows) {
        Row nr = r;
        nr.erase(nr.begin() + static_cast<std::ptrdiff_t>(p));
        out.rows.push_back(std::move(nr));
      }
      break;
    case OpKind::Replace:
      for (const auto& r : table.rows) {
        Row nr = r;
        nr[p] = detail::replace_all(r[p], op.text, op.replacement);
        out.rows.push_back(std::move(nr));
      }
      break;
  }
  return out;
}

/// Left fold of apply_op; failures carry the step index.
inline Table run_program(const Program& program, const Table& table) {
  Table t = table;
  for (std::size_t i = 0; i < program.ops.size(); ++i) {
    try {
      t = apply_op(t, program.ops[i]);
    } catch (const Error& e) {
      throw ProgramError(e, i);
    }
  }
  return t;
}

/// `t = f_split(t, 1, '/')`. The first line of a program reads table I.
inline std::string pseudocode(const TransformOp& op, std::string_view input = "t") {
  std::string args = std::string(input) + ", " + std::to_string(op.position);
  switch (op.kind) {
    case OpKind::JoinChar: return "t = f_join_char(" + args + ", " + detail::quote(op.text) + ")";
    case OpKind::Split: return "t = f_split(" + args + ", " + detail::quote(op.text) + ")";
    case OpKind::Drop: return "t = f_drop(" + args + ")";
    case OpKind::Replace:
      return "t = f_replace(" + args + ", " + detail::quote(op.text) + ", " + detail::quote(op.replacement) + ")";
  }
  return {};
}

inline std::vector<std::string> pseudocode(const Program& program) {
  if (program.empty()) return {"t = I"};
  std::vector<std::string> lines;
  for (std::size_t i = 0; i < program.ops.size(); ++i) lines.push_back(pseudocode(program.ops[i], i == 0 ? "I" : "t"));
  return lines;
}

}  // namespace uitx
