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

// UI logs: parsing, segmentation into task traces, redundant-action
// filtering and a replay simulator used to check that filtering keeps the
// observable outcome of a trace.

#pragma once

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <functional>
#include <iomanip>
#include <locale>
#include <map>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "uitx/csv.hpp"
#include "uitx/error.hpp"

namespace uitx {

using Timestamp = std::chrono::sys_time<std::chrono::milliseconds>;

namespace detail {

// Lowercase with spaces, underscores and dashes removed: "Click check box" -> "clickcheckbox".
inline std::string squash(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == ' ' || c == '_' || c == '-' || c == '\t') continue;
    out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  return out;
}

}  // namespace detail

enum class ActionKind { CopyCell, ClickField, Paste, EditField, ClickCheckBox, ClickButton, Other };

struct ActionType {
  ActionKind kind = ActionKind::Other;
  std::string label;  // original text, kept only for Other

  ActionType() = default;
  ActionType(ActionKind k) : kind(k) {}  // NOLINT(google-explicit-constructor)
  ActionType(ActionKind k, std::string l) : kind(k), label(std::move(l)) {}

  static ActionType parse(std::string_view text) {
    const std::string key = detail::squash(text);
    if (key == "copycell") return ActionKind::CopyCell;
    if (key == "clickfield") return ActionKind::ClickField;
    if (key == "paste") return ActionKind::Paste;
    if (key == "editfield") return ActionKind::EditField;
    if (key == "clickcheckbox") return ActionKind::ClickCheckBox;
    if (key == "clickbutton") return ActionKind::ClickButton;
    return {ActionKind::Other, std::string(text)};
  }

  std::string to_string() const {
    switch (kind) {
      case ActionKind::CopyCell: return "Copy cell";
      case ActionKind::ClickField: return "Click field";
      case ActionKind::Paste: return "Paste";
      case ActionKind::EditField: return "Edit field";
      case ActionKind::ClickCheckBox: return "Click check box";
      case ActionKind::ClickButton: return "Click button";
      case ActionKind::Other: return label;
    }
    return label;
  }

  bool operator==(const ActionType&) const = default;
};

enum class AppKind { Worksheet, Web, Other };

struct Source {
  AppKind kind = AppKind::Other;
  std::string label;  // original text, kept only for Other

  Source() = default;
  Source(AppKind k) : kind(k) {}  // NOLINT(google-explicit-constructor)
  Source(AppKind k, std::string l) : kind(k), label(std::move(l)) {}

  static Source parse(std::string_view text) {
    const std::string key = detail::squash(text);
    if (key == "worksheet") return AppKind::Worksheet;
    if (key == "web") return AppKind::Web;
    return {AppKind::Other, std::string(text)};
  }

  std::string to_string() const {
    switch (kind) {
      case AppKind::Worksheet: return "Worksheet";
      case AppKind::Web: return "Web";
      case AppKind::Other: return label;
    }
    return label;
  }

  bool operator==(const Source&) const = default;
};

/// One row of a UI log.
struct UiAction {
  Timestamp timestamp{};
  ActionType action_type;
  Source source;
  std::optional<std::string> content;  // clipboard payload; absent when the cell is empty
  std::string field_name;
  std::string field_value;
  std::vector<std::pair<std::string, std::string>> extra_payload;  // unrecognised columns, in file order

  bool is(ActionKind k) const { return action_type.kind == k; }
  bool is_click() const {
    return is(ActionKind::ClickField) || is(ActionKind::ClickCheckBox) || is(ActionKind::ClickButton);
  }
  // Same application element.
  bool same_element(const UiAction& other) const {
    return field_name == other.field_name && source == other.source;
  }

  bool operator==(const UiAction&) const = default;
};

// ---------------------------------------------------------------------------
// Timestamps

/// Parses ISO-8601 `YYYY-MM-DDTHH:MM:SS[.fff]` (no zone) or, when `format`
/// is non-empty, any std::get_time format.
inline std::optional<Timestamp> parse_timestamp(std::string_view text, std::string_view format = {}) {
  using namespace std::chrono;
  std::tm tm{};
  int millis = 0;
  if (format.empty()) {
    int y, mo, d, h, mi, s;
    char sep;
    int consumed = 0;
    std::string buf(text);
    if (std::sscanf(buf.c_str(), "%4d-%2d-%2d%c%2d:%2d:%2d%n", &y, &mo, &d, &sep, &h, &mi, &s, &consumed) != 7 ||
        (sep != 'T' && sep != ' ')) {
      return std::nullopt;
    }
    std::string_view rest = text.substr(static_cast<std::size_t>(consumed));
    if (!rest.empty()) {
      if (rest.front() != '.' || rest.size() < 2) return std::nullopt;
      rest.remove_prefix(1);
      int scale = 100;
      for (char c : rest) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
        millis += (c - '0') * scale;
        scale /= 10;
      }
    }
    tm.tm_year = y - 1900;
    tm.tm_mon = mo - 1;
    tm.tm_mday = d;
    tm.tm_hour = h;
    tm.tm_min = mi;
    tm.tm_sec = s;
  } else {
    std::istringstream in{std::string(text)};
    in.imbue(std::locale::classic());
    in >> std::get_time(&tm, std::string(format).c_str());
    if (in.fail()) return std::nullopt;
    in >> std::ws;
    if (!in.eof()) return std::nullopt;
  }
  const year_month_day ymd{year{tm.tm_year + 1900}, month{static_cast<unsigned>(tm.tm_mon + 1)},
                           day{static_cast<unsigned>(tm.tm_mday)}};
  if (!ymd.ok() || tm.tm_hour < 0 || tm.tm_hour > 23 || tm.tm_min < 0 || tm.tm_min > 59 || tm.tm_sec < 0 ||
      tm.tm_sec > 60) {
    return std::nullopt;
  }
  return Timestamp{sys_days{ymd}.time_since_epoch()} + hours{tm.tm_hour} + minutes{tm.tm_min} +
         seconds{tm.tm_sec} + milliseconds{millis};
}

inline std::string format_timestamp(Timestamp ts) {
  using namespace std::chrono;
  const auto day_point = floor<days>(ts);
  const year_month_day ymd{day_point};
  const hh_mm_ss hms{ts - day_point};
  char buf[40];
  int n = std::snprintf(buf, sizeof buf, "%04d-%02u-%02uT%02d:%02d:%02d", static_cast<int>(ymd.year()),
                        static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()),
                        static_cast<int>(hms.hours().count()), static_cast<int>(hms.minutes().count()),
                        static_cast<int>(hms.seconds().count()));
  std::string out(buf, static_cast<std::size_t>(n));
  if (auto ms = hms.subseconds().count(); ms != 0) {
    std::snprintf(buf, sizeof buf, ".%03d", static_cast<int>(ms));
    out += buf;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parsing and serialisation

struct ParseOptions {
  std::string timestamp_format;  // empty: ISO-8601
  bool require_monotonic = true;
};

inline const std::vector<std::string>& standard_columns() {
  static const std::vector<std::string> cols{"Timestamp", "Action Type", "Source",
                                             "Content",   "Field name",  "Field value"};
  return cols;
}

inline std::vector<UiAction> parse_log(std::string_view csv_text, const ParseOptions& options = {}) {
  const auto records = csv::read(csv_text);
  if (records.empty()) throw Error(ErrorKind::MalformedCsv, "missing header row");

  const auto& header = records.front().fields;
  constexpr std::size_t kMissing = static_cast<std::size_t>(-1);
  std::vector<std::size_t> slot(standard_columns().size(), kMissing);
  std::vector<std::size_t> extra_columns;
  for (std::size_t c = 0; c < header.size(); ++c) {
    const std::string key = detail::squash(header[c]);
    bool matched = false;
    for (std::size_t s = 0; s < standard_columns().size(); ++s) {
      if (key == detail::squash(standard_columns()[s])) {
        if (slot[s] != kMissing) throw Error(ErrorKind::MalformedCsv, "duplicate column '" + header[c] + "'");
        slot[s] = c;
        matched = true;
        break;
      }
    }
    if (!matched) extra_columns.push_back(c);
  }
  for (std::size_t s : {0u, 1u, 2u, 4u}) {
    if (slot[s] == kMissing) {
      throw Error(ErrorKind::MalformedCsv, "header lacks required column '" + standard_columns()[s] + "'");
    }
  }

  auto cell = [&](const csv::Record& rec, std::size_t s) -> std::string {
    return slot[s] == kMissing ? std::string() : rec.fields[slot[s]];
  };

  std::vector<UiAction> actions;
  actions.reserve(records.size() - 1);
  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& rec = records[r];
    const std::string row = "row " + std::to_string(r) + " (line " + std::to_string(rec.line) + ")";
    if (rec.fields.size() != header.size()) {
      throw Error(ErrorKind::MalformedCsv, row + ": expected " + std::to_string(header.size()) + " columns, got " +
                                               std::to_string(rec.fields.size()));
    }
    UiAction a;
    auto ts = parse_timestamp(cell(rec, 0), options.timestamp_format);
    if (!ts) throw Error(ErrorKind::BadTimestamp, row + ": cannot parse '" + cell(rec, 0) + "'");
    if (options.require_monotonic && !actions.empty() && *ts < actions.back().timestamp) {
      throw Error(ErrorKind::BadTimestamp, row + ": timestamp goes backwards");
    }
    a.timestamp = *ts;
    a.action_type = ActionType::parse(cell(rec, 1));
    a.source = Source::parse(cell(rec, 2));
    if (std::string content = cell(rec, 3); !content.empty()) a.content = std::move(content);
    a.field_name = cell(rec, 4);
    a.field_value = cell(rec, 5);
    for (std::size_t c : extra_columns) a.extra_payload.emplace_back(header[c], rec.fields[c]);
    if (a.is(ActionKind::CopyCell) && !a.content) {
      throw Error(ErrorKind::MalformedCsv, row + ": copy action without content");
    }
    actions.push_back(std::move(a));
  }
  return actions;
}

/// Canonical CSV: standard columns first, then extra columns in order of first appearance.
inline std::string serialize_log(std::span<const UiAction> actions) {
  std::vector<std::string> extras;
  for (const auto& a : actions) {
    for (const auto& [key, value] : a.extra_payload) {
      if (std::find(extras.begin(), extras.end(), key) == extras.end()) extras.push_back(key);
    }
  }
  std::string out;
  std::vector<std::string> header = standard_columns();
  header.insert(header.end(), extras.begin(), extras.end());
  csv::write_record(out, header);
  for (const auto& a : actions) {
    std::vector<std::string> row{format_timestamp(a.timestamp), a.action_type.to_string(), a.source.to_string(),
                                 a.content.value_or(""),        a.field_name,             a.field_value};
    for (const auto& key : extras) {
      auto it = std::find_if(a.extra_payload.begin(), a.extra_payload.end(),
                             [&](const auto& kv) { return kv.first == key; });
      row.push_back(it == a.extra_payload.end() ? std::string() : it->second);
    }
    csv::write_record(out, row);
  }
  return out;
}

inline std::vector<UiAction> read_log_file(const std::string& path, const ParseOptions& options = {}) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::ios_base::failure("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_log(buf.str(), options);
}

// ---------------------------------------------------------------------------
// Segmentation

struct EndActionSpec {
  ActionType type = ActionKind::ClickButton;
  std::string field_name = "Submit";

  /// "Click button:Submit" or "ClickButton:Submit".
  static EndActionSpec parse(std::string_view text) {
    auto colon = text.find(':');
    if (colon == std::string_view::npos || colon == 0 || colon + 1 == text.size()) {
      throw Error(ErrorKind::InvalidArgument, "end action must look like TYPE:FIELD, got '" + std::string(text) + "'");
    }
    return {ActionType::parse(csv::detail::trim(text.substr(0, colon))),
            std::string(csv::detail::trim(text.substr(colon + 1)))};
  }

  bool matches(const UiAction& a) const { return a.action_type == type && a.field_name == field_name; }
};

struct TaskTrace {
  std::size_t trace_id = 0;
  std::vector<UiAction> actions;

  bool operator==(const TaskTrace&) const = default;
};

struct Segmentation {
  std::vector<TaskTrace> traces;
  std::size_t dropped_actions = 0;  // trailing actions after the last end action
  std::vector<std::string> warnings;
};

inline Segmentation segment(std::span<const UiAction> log, const EndActionSpec& end_action = {}) {
  Segmentation result;
  TaskTrace current;
  for (const auto& a : log) {
    current.actions.push_back(a);
    if (end_action.matches(a)) {
      current.trace_id = result.traces.size();
      result.traces.push_back(std::move(current));
      current = TaskTrace{};
    }
  }
  if (result.traces.empty()) {
    throw Error(ErrorKind::NoTracesFound,
                "end action '" + end_action.type.to_string() + ":" + end_action.field_name + "' never occurs");
  }
  result.dropped_actions = current.actions.size();
  if (result.dropped_actions > 0) {
    result.warnings.push_back(std::to_string(result.dropped_actions) + " trailing actions dropped");
  }
  return result;
}

// ---------------------------------------------------------------------------
// Filtering

/// A rule flags one action as redundant given the whole trace as context.
struct FilterRule {
  std::string name;
  std::function<bool(std::span<const UiAction> actions, std::size_t i)> redundant;
};

namespace rules {

// Two copies with no paste in between: the first one never reaches a target.
inline FilterRule copy_without_paste() {
  return {"copy-without-paste", [](std::span<const UiAction> t, std::size_t i) {
            if (!t[i].is(ActionKind::CopyCell)) return false;
            for (std::size_t j = i + 1; j < t.size(); ++j) {
              if (t[j].is(ActionKind::Paste)) return false;
              if (t[j].is(ActionKind::CopyCell)) return true;
            }
            return false;
          }};
}

// A field click immediately superseded by another field click.
inline FilterRule double_click() {
  return {"double-click", [](std::span<const UiAction> t, std::size_t i) {
            return t[i].is(ActionKind::ClickField) && i + 1 < t.size() && t[i + 1].is(ActionKind::ClickField);
          }};
}

// An edit overwritten by a later edit of the same field with nothing reading
// or pasting into that field in between.
inline FilterRule overwritten_edit() {
  return {"overwritten-edit", [](std::span<const UiAction> t, std::size_t i) {
            if (!t[i].is(ActionKind::EditField)) return false;
            for (std::size_t j = i + 1; j < t.size(); ++j) {
              if (t[j].same_element(t[i])) return t[j].is(ActionKind::EditField);
            }
            return false;
          }};
}

// Worksheet cell selection that is not followed by a copy, paste or edit
// before the next click.
inline FilterRule navigation_click() {
  return {"navigation-click", [](std::span<const UiAction> t, std::size_t i) {
            if (!t[i].is(ActionKind::ClickField) || t[i].source.kind != AppKind::Worksheet) return false;
            for (std::size_t j = i + 1; j < t.size(); ++j) {
              if (t[j].is(ActionKind::CopyCell) || t[j].is(ActionKind::Paste) || t[j].is(ActionKind::EditField)) {
                return false;
              }
              if (t[j].is_click()) return true;
            }
            return true;
          }};
}

}  // namespace rules

inline std::vector<FilterRule> default_rules() {
  return {rules::copy_without_paste(), rules::double_click(), rules::overwritten_edit(), rules::navigation_click()};
}

/// Removes redundant actions until no rule fires. `removed`, when given,
/// receives per-rule removal counts.
inline TaskTrace filter_trace(const TaskTrace& trace, std::span<const FilterRule> rules,
                              std::map<std::string, std::size_t>* removed = nullptr) {
  TaskTrace out = trace;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& rule : rules) {
      for (std::size_t i = 0; i < out.actions.size(); ++i) {
        if (rule.redundant(out.actions, i)) {
          out.actions.erase(out.actions.begin() + static_cast<std::ptrdiff_t>(i));
          if (removed) ++(*removed)[rule.name];
          changed = true;
          break;
        }
      }
      if (changed) break;
    }
  }
  return out;
}

inline TaskTrace filter_trace(const TaskTrace& trace) {
  static const auto rules = default_rules();
  return filter_trace(trace, rules);
}

// ---------------------------------------------------------------------------
// Replay

enum class ReplayMode { Lenient, Strict };

struct ReplayResult {
  std::map<std::string, std::string> final_values;  // field name -> value of its last edit
  std::vector<std::string> warnings;
};

/// Simulates the clipboard and the observed value of every element.
/// Checks: pastes need a clipboard and must carry its value; clicks, copies and
/// pastes report the element value before the action, which must agree with
/// the last known value. Strict mode throws on the first violation.
inline ReplayResult replay(const TaskTrace& trace, ReplayMode mode = ReplayMode::Lenient) {
  ReplayResult result;
  std::optional<std::string> clipboard;
  std::map<std::pair<std::string, std::string>, std::string> known;

  auto complain = [&](std::size_t i, const std::string& msg) {
    std::string full = "action " + std::to_string(i) + ": " + msg;
    if (mode == ReplayMode::Strict) throw Error(ErrorKind::ReplayInconsistency, full);
    result.warnings.push_back(std::move(full));
  };
  auto observe = [&](std::size_t i, const UiAction& a) {
    auto key = std::make_pair(a.source.to_string(), a.field_name);
    auto it = known.find(key);
    if (it != known.end() && it->second != a.field_value) {
      complain(i, "'" + a.field_name + "' shows '" + a.field_value + "' but replay has '" + it->second + "'");
    }
    known[key] = a.field_value;
  };

  for (std::size_t i = 0; i < trace.actions.size(); ++i) {
    const UiAction& a = trace.actions[i];
    switch (a.action_type.kind) {
      case ActionKind::CopyCell:
        observe(i, a);
        clipboard = a.content;
        break;
      case ActionKind::ClickField:
      case ActionKind::ClickCheckBox:
        observe(i, a);
        break;
      case ActionKind::Paste:
        if (!clipboard) {
          complain(i, "paste with empty clipboard");
        } else if (a.content != clipboard) {
          complain(i, "paste of '" + a.content.value_or("") + "' but clipboard holds '" + *clipboard + "'");
        }
        observe(i, a);
        // the pasted text lands at an unknown cursor position
        known.erase(std::make_pair(a.source.to_string(), a.field_name));
        break;
      case ActionKind::EditField:
        known[std::make_pair(a.source.to_string(), a.field_name)] = a.field_value;
        result.final_values[a.field_name] = a.field_value;
        break;
      case ActionKind::ClickButton:
      case ActionKind::Other:
        break;
    }
  }
  return result;
}

inline std::map<std::string, std::string> replay_final_values(const TaskTrace& trace,
                                                              ReplayMode mode = ReplayMode::Lenient) {
  return replay(trace, mode).final_values;
}

}  // namespace uitx
