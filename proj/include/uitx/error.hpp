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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace uitx {

enum class ErrorKind {
  MalformedCsv,
  BadTimestamp,
  NoTracesFound,
  ReplayInconsistency,
  OrphanPaste,
  EmptyExample,
  PositionOutOfRange,
  RaggedSplit,
  EmptyDelimiter,
  InvalidArgument,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedCsv: return "MalformedCsv";
    case ErrorKind::BadTimestamp: return "BadTimestamp";
    case ErrorKind::NoTracesFound: return "NoTracesFound";
    case ErrorKind::ReplayInconsistency: return "ReplayInconsistency";
    case ErrorKind::OrphanPaste: return "OrphanPaste";
    case ErrorKind::EmptyExample: return "EmptyExample";
    case ErrorKind::PositionOutOfRange: return "PositionOutOfRange";
    case ErrorKind::RaggedSplit: return "RaggedSplit";
    case ErrorKind::EmptyDelimiter: return "EmptyDelimiter";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

// All library failures are reported through this type; kind() tells them apart.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Raised by run_program; carries the index of the op that failed.
class ProgramError : public Error {
 public:
  ProgramError(const Error& cause, std::size_t step)
      : Error(cause.kind(), "step " + std::to_string(step) + ": " + cause.what()), step_(step) {}

  std::size_t step() const noexcept { return step_; }

 private:
  std::size_t step_;
};

}  // namespace uitx
