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
#include <cstdint>
#include <string>
#include <string_view>

#include <unicode/uchar.h>
#include <unicode/utf8.h>

#include "uitx/extract.hpp"

namespace uitx {

inline constexpr std::string_view kDigitToken = "<d>+";
inline constexpr std::string_view kAlphaToken = "<a>+";
// Joins the per-input patterns of a multi-input example. Never produced by tokenize().
inline constexpr char kInputSeparator = '\x1F';

/// Structural pattern of a string. `symbols` counts tokens and literal
/// characters, each as one symbol.
struct TokenPattern {
  std::string text;
  std::size_t symbols = 0;

  bool operator==(const TokenPattern&) const = default;
};

enum class CharClass { Digit, Alpha, Literal };

/// Unicode Nd is a digit, any L* category is alphabetic.
inline CharClass classify(UChar32 cp) {
  if (cp < 0) return CharClass::Literal;
  if (u_isdigit(cp)) return CharClass::Digit;
  if (u_isalpha(cp)) return CharClass::Alpha;
  return CharClass::Literal;
}

inline TokenPattern tokenize(std::string_view value) {
  TokenPattern p;
  const auto* bytes = reinterpret_cast<const std::uint8_t*>(value.data());
  const auto length = static_cast<std::int32_t>(value.size());
  std::int32_t i = 0;
  CharClass run = CharClass::Literal;
  while (i < length) {
    const std::int32_t start = i;
    UChar32 cp;
    U8_NEXT(bytes, i, length, cp);
    const CharClass cls = classify(cp);
    if (cls == CharClass::Literal) {
      p.text.append(value.substr(static_cast<std::size_t>(start), static_cast<std::size_t>(i - start)));
      ++p.symbols;
    } else if (cls != run) {
      p.text.append(cls == CharClass::Digit ? kDigitToken : kAlphaToken);
      ++p.symbols;
    }
    run = cls;
  }
  return p;
}

/// Group key of an example: input patterns in input order.
inline std::string tokenize_inputs(const TransformationExample& example) {
  std::string key;
  for (std::size_t i = 0; i < example.inputs.size(); ++i) {
    if (i) key.push_back(kInputSeparator);
    key += tokenize(example.inputs[i].value).text;
  }
  return key;
}

/// Human-readable key: input separator shown as " | ".
inline std::string printable_key(std::string_view key) {
  std::string out;
  for (char c : key) {
    if (c == kInputSeparator) {
      out += " | ";
    } else {
      out.push_back(c);
    }
  }
  return out;
}

}  // namespace uitx
