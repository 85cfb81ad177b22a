// Copyright 2026 The EPL Authors
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
#include <gtest/gtest.h>

#include <random>

#include "epl/normalize.hpp"
#include "epl/textproc.hpp"

namespace epl {
namespace {

TEST(NormalizeLabel, LowercasesAndSplitsOnWhitespace) {
  EXPECT_EQ(normalize_label("Supervised learning"),
            (Tokens{"supervised", "learning"}));
  EXPECT_EQ(normalize_label("Gaussian processes"),
            (Tokens{"gaussian", "processes"}));
}

TEST(NormalizeLabel, HyphenIsASeparator) {
  EXPECT_EQ(normalize_label("Real-time systems"),
            (Tokens{"real", "time", "systems"}));
}

TEST(NormalizeLabel, PunctuationSeparatesAndNeverYieldsEmptyTokens) {
  EXPECT_EQ(normalize_label("  Theory of computation; (general) --"),
            (Tokens{"theory", "of", "computation", "general"}));
  EXPECT_EQ(normalize_label("Bayes' rule"), (Tokens{"bayes", "rule"}));
  EXPECT_TRUE(normalize_label("").empty());
  EXPECT_TRUE(normalize_label(" -- ,. ").empty());
}

TEST(NormalizeLabel, KeepsNumbers) {
  EXPECT_EQ(normalize_label("ISO 9001"), (Tokens{"iso", "9001"}));
}

TEST(NormalizeLabel, ComposesBeforeComparing) {
  // "e" + COMBINING ACUTE ACCENT versus precomposed U+00E9.
  EXPECT_EQ(normalize_label("Cafe\xcc\x81 society"),
            normalize_label("Caf\xc3\xa9 society"));
  EXPECT_EQ(normalize_label("\xc3\x89" "COLE"), (Tokens{"\xc3\xa9" "cole"}));
}

TEST(NormalizeLabel, InvalidUtf8ActsAsSeparator) {
  EXPECT_EQ(normalize_label("ab\xff" "cd"), (Tokens{"ab", "cd"}));
}

TEST(NormalizeLabel, JoinTokens) {
  EXPECT_EQ(join_tokens({"a", "b", "c"}), "a b c");
  EXPECT_EQ(join_tokens({}), "");
}

// tokenize and normalize_label are one authority; every token is a
// non-empty, already-normalized word.
TEST(NormalizeLabel, PropertyTokenizeAgreesAndTokensAreStable) {
  std::mt19937 rng(7);
  const std::string alphabet[] = {"a", "B", "z", "1", " ", "-", ".", ",",
                                  "\t", "\n", "\xc3\xa9", "\xc3\x89", "'",
                                  "(", "Q", "\xe2\x80\x94"};
  for (int i = 0; i < 500; ++i) {
    std::string s;
    int n = std::uniform_int_distribution<int>(0, 30)(rng);
    for (int k = 0; k < n; ++k) s += alphabet[rng() % std::size(alphabet)];
    Tokens tokens = normalize_label(s);
    ASSERT_EQ(tokens, tokenize(s));
    for (const auto& t : tokens) {
      ASSERT_FALSE(t.empty());
      ASSERT_EQ(normalize_label(t), Tokens{t}) << "token not a fixed point: " << t;
    }
    ASSERT_EQ(normalize_label(join_tokens(tokens)), tokens);
  }
}

}  // namespace
}  // namespace epl
