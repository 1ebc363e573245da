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

// Transformation examples from filtered task traces. Every paste is traced
// back to the most recent copy, which gives the source cell and the value
// that was transferred; the last edit of a field gives the output value.

#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "uitx/error.hpp"
#include "uitx/uilog.hpp"

namespace uitx {

struct SourceRef {
  std::string document;  // e.g. "Worksheet"
  std::string locator;   // e.g. "A3"

  auto operator<=>(const SourceRef&) const = default;
};

struct TargetRef {
  std::string document;  // e.g. "Web"
  std::string field;     // e.g. "Full Name"

  auto operator<=>(const TargetRef&) const = default;
};

struct InputCell {
  SourceRef source;
  std::string value;

  bool operator==(const InputCell&) const = default;
};

struct OutputCell {
  TargetRef target;
  std::string value;

  bool operator==(const OutputCell&) const = default;
};

struct TransformationExample {
  std::size_t trace_id = 0;
  std::vector<InputCell> inputs;    // by first-copy (document) or paste (per target) order
  std::vector<OutputCell> outputs;  // by last-edit order

  std::vector<std::string> input_values() const {
    std::vector<std::string> v;
    for (const auto& c : inputs) v.push_back(c.value);
    return v;
  }
  std::vector<std::string> output_values() const {
    std::vector<std::string> v;
    for (const auto& c : outputs) v.push_back(c.value);
    return v;
  }

  bool operator==(const TransformationExample&) const = default;
};

enum class InputMode { PastedAndEdited, ManualOnly };

struct PasteRecord {
  std::size_t action_index = 0;  // position of the paste in the trace
  std::string value;             // what the resolved copy put on the clipboard
  SourceRef source;

  bool operator==(const PasteRecord&) const = default;
};

struct TargetFieldHistory {
  TargetRef target;
  std::vector<PasteRecord> pastes;
  std::string final_value;
  InputMode input_mode = InputMode::ManualOnly;
  std::size_t last_edit_index = 0;
};

/// One history per edited field, ordered by the position of its last edit.
/// Only pastes before the last edit count; each resolves to the nearest
/// preceding copy.
inline std::vector<TargetFieldHistory> extract_target_fields(const TaskTrace& trace) {
  const auto& acts = trace.actions;
  std::map<TargetRef, std::size_t> last_edit;
  for (std::size_t i = 0; i < acts.size(); ++i) {
    if (acts[i].is(ActionKind::EditField)) last_edit[{acts[i].source.to_string(), acts[i].field_name}] = i;
  }

  std::vector<TargetFieldHistory> out;
  for (const auto& [target, edit_index] : last_edit) {
    TargetFieldHistory h;
    h.target = target;
    h.final_value = acts[edit_index].field_value;
    h.last_edit_index = edit_index;
    std::optional<std::size_t> last_copy;
    for (std::size_t i = 0; i < edit_index; ++i) {
      const UiAction& a = acts[i];
      if (a.is(ActionKind::CopyCell)) {
        last_copy = i;
      } else if (a.is(ActionKind::Paste) && a.field_name == target.field && a.source.to_string() == target.document) {
        if (!last_copy) {
          throw Error(ErrorKind::OrphanPaste, "trace " + std::to_string(trace.trace_id) + ", action " +
                                                  std::to_string(i) + ": paste into '" + target.field +
                                                  "' has no preceding copy");
        }
        const UiAction& copy = acts[*last_copy];
        h.pastes.push_back({i, copy.content.value_or(""), {copy.source.to_string(), copy.field_name}});
      }
    }
    h.input_mode = h.pastes.empty() ? InputMode::ManualOnly : InputMode::PastedAndEdited;
    out.push_back(std::move(h));
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.last_edit_index < b.last_edit_index; });
  return out;
}

namespace detail {

// Paste order; a source pasted twice keeps its first slot and its latest value.
inline std::vector<InputCell> collapse_sources(const std::vector<PasteRecord>& pastes) {
  std::vector<InputCell> inputs;
  for (const auto& p : pastes) {
    auto it = std::find_if(inputs.begin(), inputs.end(), [&](const InputCell& c) { return c.source == p.source; });
    if (it == inputs.end()) {
      inputs.push_back({p.source, p.value});
    } else {
      it->value = p.value;
    }
  }
  return inputs;
}

}  // namespace detail

/// Per-target examples. Manually typed fields cannot be traced to a source
/// and produce no example.
inline std::map<TargetRef, std::vector<TransformationExample>> extract_examples_per_target(
    std::span<const TaskTrace> traces) {
  std::map<TargetRef, std::vector<TransformationExample>> out;
  for (const auto& trace : traces) {
    for (const auto& h : extract_target_fields(trace)) {
      if (h.input_mode == InputMode::ManualOnly) continue;
      TransformationExample ex;
      ex.trace_id = trace.trace_id;
      ex.inputs = detail::collapse_sources(h.pastes);
      ex.outputs.push_back({h.target, h.final_value});
      out[h.target].push_back(std::move(ex));
    }
  }
  return out;
}

struct DocumentExampleOptions {
  bool include_manual = false;  // keep untraceable outputs, for diagnostics
};

/// Whole-document example: every distinct copied (source, value) pair in
/// first-copy order, and the final value of every pasted-into field.
inline TransformationExample build_document_example(const TaskTrace& trace,
                                                    const DocumentExampleOptions& options = {}) {
  TransformationExample ex;
  ex.trace_id = trace.trace_id;
  for (const auto& a : trace.actions) {
    if (!a.is(ActionKind::CopyCell)) continue;
    InputCell cell{{a.source.to_string(), a.field_name}, a.content.value_or("")};
    if (std::find(ex.inputs.begin(), ex.inputs.end(), cell) == ex.inputs.end()) ex.inputs.push_back(std::move(cell));
  }
  if (ex.inputs.empty()) {
    throw Error(ErrorKind::EmptyExample, "trace " + std::to_string(trace.trace_id) + " contains no copy action");
  }
  for (const auto& h : extract_target_fields(trace)) {
    if (h.input_mode == InputMode::ManualOnly && !options.include_manual) continue;
    ex.outputs.push_back({h.target, h.final_value});
  }
  return ex;
}

}  // namespace uitx
