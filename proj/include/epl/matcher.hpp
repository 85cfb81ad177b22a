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
#ifndef EPL_MATCHER_HPP_
#define EPL_MATCHER_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "epl/taxonomy.hpp"
#include "epl/textproc.hpp"

namespace epl {

// Evidence that a document mentions a concept.
struct Annotation {
  std::string doc_id;
  std::string concept_id;
  std::string phrase;  // matched tokens joined by single spaces
  std::size_t sentence_index = 0;
  std::size_t start = 0;  // token span [start, end) within the sentence
  std::size_t end = 0;

  bool operator==(const Annotation&) const = default;
};

// Aho-Corasick automaton over interned tokens. Immutable after compile and
// safe to share between threads.
class Matcher {
 public:
  struct Match {
    std::size_t start = 0;
    std::size_t end = 0;
    std::size_t phrase = 0;  // index into phrases()

    bool operator==(const Match&) const = default;
  };

  struct Phrase {
    Tokens tokens;
    std::string text;
    std::vector<std::string> concepts;  // sorted, non-empty
  };

  Matcher() = default;
  explicit Matcher(const PhraseLexicon& lexicon);

  // Leftmost-longest, non-overlapping matches in one token sequence,
  // ordered by start.
  std::vector<Match> find(std::span<const std::string> tokens) const;

  const std::vector<Phrase>& phrases() const { return phrases_; }

 private:
  static constexpr std::uint32_t kNone = UINT32_MAX;

  struct Node {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> next;  // sorted
    std::uint32_t fail = 0;
    std::uint32_t output = kNone;  // nearest terminal node on the fail chain
    std::uint32_t phrase = kNone;
  };

  std::uint32_t step(std::uint32_t state, std::uint32_t symbol) const;
  std::uint32_t child(std::uint32_t state, std::uint32_t symbol) const;

  std::unordered_map<std::string, std::uint32_t> symbols_;
  std::vector<Node> nodes_;
  std::vector<Phrase> phrases_;
};

inline Matcher compile(const PhraseLexicon& lexicon) { return Matcher(lexicon); }

// One Annotation per (match, concept), ordered by (sentence, start, concept).
// Matches never cross sentence boundaries.
std::vector<Annotation> annotate(std::string_view doc_id, const CleanText& text,
                                 const Matcher& matcher);

}  // namespace epl

#endif  // EPL_MATCHER_HPP_
