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

#include "uitx/tokenize.hpp"

#include <gtest/gtest.h>

#include "support.hpp"

namespace uitx {
namespace {

TransformationExample with_inputs(std::vector<std::string> values) {
  TransformationExample ex;
  for (auto& v : values) ex.inputs.push_back({{"Worksheet", "A1"}, std::move(v)});
  return ex;
}

std::size_t code_points(std::string_view s) {
  return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; }));
}

TEST(Tokenize, Address) {
  EXPECT_EQ(tokenize("99 Beacon Rd, Port Melbourne, VIC 3207, Australia").text,
            "<d>+ <a>+ <a>+, <a>+ <a>+, <a>+ <d>+, <a>+");
}

TEST(Tokenize, SmallCases) {
  EXPECT_EQ(tokenize("").text, "");
  EXPECT_EQ(tokenize("").symbols, 0u);
  EXPECT_EQ(tokenize("11/04/1986").text, "<d>+/<d>+/<d>+");
  EXPECT_EQ(tokenize("11/04/1986").symbols, 5u);
  EXPECT_EQ(tokenize("B3").text, "<a>+<d>+");
  EXPECT_EQ(tokenize("+61 029 211 4904").text, "+<d>+ <d>+ <d>+ <d>+");
  EXPECT_EQ(tokenize("a_b").text, "<a>+_<a>+");
}

TEST(Tokenize, UnicodeClasses) {
  EXPECT_EQ(tokenize("Müller-Łukasz").text, "<a>+-<a>+");
  EXPECT_EQ(tokenize("東京 ١٢٣").text, "<a>+ <d>+");
  EXPECT_EQ(tokenize("5€").text, "<d>+€");
  // invalid UTF-8 is kept as literal bytes
  EXPECT_EQ(tokenize(std::string("a\xFF") + "b").text, std::string("<a>+\xFF<a>+"));
}

TEST(TokenizeInputs, Keys) {
  EXPECT_EQ(tokenize_inputs(with_inputs({"Albert", "Rauf"})), "<a>+\x1F<a>+");
  EXPECT_EQ(tokenize_inputs(with_inputs({"Germany"})), "<a>+");
  EXPECT_EQ(tokenize_inputs(with_inputs({"+61 029 211 4904"})), "+<d>+ <d>+ <d>+ <d>+");
  EXPECT_EQ(printable_key(tokenize_inputs(with_inputs({"Albert", "Rauf"}))), "<a>+ | <a>+");
}

TEST(TokenizeProperties, SeparatorsOnlyAreFixedPoints) {
  testing::Rng rng(5);
  static constexpr std::string_view kSeps = " ,./-+@#()_:;'\"!?";
  for (int i = 0; i < 500; ++i) {
    std::string s;
    for (std::size_t n = rng.below(12); n > 0; --n) s.push_back(kSeps[rng.below(kSeps.size())]);
    EXPECT_EQ(tokenize(s).text, s);
  }
}

TEST(TokenizeProperties, NeverMoreSymbolsThanCharacters) {
  testing::Rng rng(6);
  static const std::vector<std::string> kPieces{"a", "Z", "7", " ", ",", "ü", "٣", "-", "東"};
  for (int i = 0; i < 500; ++i) {
    std::string s;
    for (std::size_t n = rng.below(20); n > 0; --n) s += rng.pick(kPieces);
    const auto p = tokenize(s);
    EXPECT_LE(p.symbols, code_points(s)) << s;
    EXPECT_EQ(tokenize(p.text).text.find_first_of("0123456789"), std::string::npos);
  }
}

TEST(TokenizeProperties, RunSubstitutionInvariance) {
  testing::Rng rng(8);
  static const std::vector<std::string> kSeps{" ", ", ", "/", "-", "@", "."};
  for (int i = 0; i < 500; ++i) {
    std::string a, b;
    for (std::size_t n = 1 + rng.below(6); n > 0; --n) {
      if (rng.coin()) {
        a += std::to_string(rng.below(100000));
        b += std::to_string(rng.below(100000));
      } else {
        a += rng.coin() ? "abc" : "Xy";
        b += rng.coin() ? "Quux" : "q";
      }
      const auto& sep = rng.pick(kSeps);
      a += sep;
      b += sep;
    }
    EXPECT_EQ(tokenize(a), tokenize(b)) << a << " vs " << b;
  }
}

}  // namespace
}  // namespace uitx
