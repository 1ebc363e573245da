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

// Minimal RFC 4180 reader/writer. Whitespace around unquoted fields and
// around quoted fields is ignored, so hand-aligned logs such as
// `2019-03-03T19:02:18, Copy cell, Worksheet, "Albert", A3, "Albert"` parse.

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "uitx/error.hpp"

namespace uitx::csv {

struct Record {
  std::size_t line = 0;  // 1-based line where the record starts
  std::vector<std::string> fields;
};

namespace detail {

inline bool is_blank(char c) { return c == ' ' || c == '\t'; }

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && is_blank(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_blank(s.back())) s.remove_suffix(1);
  return s;
}

}  // namespace detail

inline std::vector<Record> read(std::string_view text) {
  std::vector<Record> records;
  std::size_t pos = 0;
  std::size_t line = 1;
  const std::size_t n = text.size();

  // UTF-8 byte order mark
  if (text.substr(0, 3) == "\xEF\xBB\xBF") pos = 3;

  while (pos < n) {
    Record rec;
    rec.line = line;
    bool end_of_record = false;
    while (!end_of_record) {
      while (pos < n && detail::is_blank(text[pos])) ++pos;
      std::string field;
      if (pos < n && text[pos] == '"') {
        ++pos;
        bool closed = false;
        while (pos < n) {
          char c = text[pos];
          if (c == '"') {
            if (pos + 1 < n && text[pos + 1] == '"') {
              field.push_back('"');
              pos += 2;
              continue;
            }
            ++pos;
            closed = true;
            break;
          }
          if (c == '\n') ++line;
          field.push_back(c);
          ++pos;
        }
        if (!closed) {
          throw Error(ErrorKind::MalformedCsv,
                      "unbalanced quote in record starting at line " + std::to_string(rec.line));
        }
        while (pos < n && (detail::is_blank(text[pos]) || text[pos] == '\r')) ++pos;
        if (pos < n && text[pos] != ',' && text[pos] != '\n') {
          throw Error(ErrorKind::MalformedCsv,
                      "unexpected character after closing quote at line " + std::to_string(line));
        }
      } else {
        std::size_t start = pos;
        while (pos < n && text[pos] != ',' && text[pos] != '\n') {
          if (text[pos] == '"') {
            throw Error(ErrorKind::MalformedCsv,
                        "stray quote inside unquoted field at line " + std::to_string(line));
          }
          ++pos;
        }
        std::string_view raw = text.substr(start, pos - start);
        if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
        field = std::string(detail::trim(raw));
      }
      rec.fields.push_back(std::move(field));
      if (pos >= n) {
        end_of_record = true;
      } else if (text[pos] == ',') {
        ++pos;
      } else {  // '\n'
        ++pos;
        ++line;
        end_of_record = true;
      }
    }
    bool blank = rec.fields.size() == 1 && rec.fields[0].empty();
    if (!blank) records.push_back(std::move(rec));
  }
  return records;
}

inline bool needs_quotes(std::string_view field) {
  if (field.empty()) return false;
  if (detail::is_blank(field.front()) || detail::is_blank(field.back())) return true;
  return field.find_first_of(",\"\r\n") != std::string_view::npos;
}

inline void write_field(std::string& out, std::string_view field) {
  if (!needs_quotes(field)) {
    out.append(field);
    return;
  }
  out.push_back('"');
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
}

inline void write_record(std::string& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out.push_back(',');
    write_field(out, fields[i]);
  }
  out.push_back('\n');
}

}  // namespace uitx::csv
