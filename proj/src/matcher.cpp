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
#include "epl/matcher.hpp"

#include <algorithm>
#include <deque>

namespace epl {

Matcher::Matcher(const PhraseLexicon& lexicon) {
  nodes_.emplace_back();
  // Lexicon entries iterate in sorted order, so symbol ids and node layout
  // are deterministic.
  for (const auto& [tokens, concepts] : lexicon.entries()) {
    std::uint32_t state = 0;
    for (const auto& token : tokens) {
      auto [it, inserted] = symbols_.try_emplace(
          token, static_cast<std::uint32_t>(symbols_.size()));
      std::uint32_t symbol = it->second;
      std::uint32_t next = child(state, symbol);
      if (next == kNone) {
        next = static_cast<std::uint32_t>(nodes_.size());
        auto& edges = nodes_[state].next;
        edges.insert(std::lower_bound(edges.begin(), edges.end(),
                                      std::make_pair(symbol, 0u)),
                     {symbol, next});
        nodes_.emplace_back();
      }
      state = next;
    }
    nodes_[state].phrase = static_cast<std::uint32_t>(phrases_.size());
    phrases_.push_back(Phrase{tokens, join_tokens(tokens),
                              {concepts.begin(), concepts.end()}});
  }

  // Breadth-first construction of failure and output links.
  std::deque<std::uint32_t> queue;
  for (const auto& [symbol, next] : nodes_[0].next) {
    nodes_[next].fail = 0;
    queue.push_back(next);
  }
  while (!queue.empty()) {
    std::uint32_t state = queue.front();
    queue.pop_front();
    for (const auto& [symbol, next] : nodes_[state].next) {
      std::uint32_t f = nodes_[state].fail;
      while (f != 0 && child(f, symbol) == kNone) f = nodes_[f].fail;
      std::uint32_t target = child(f, symbol);
      nodes_[next].fail = target == kNone || target == next ? 0 : target;
      const Node& fail_node = nodes_[nodes_[next].fail];
      nodes_[next].output =
          fail_node.phrase != kNone ? nodes_[next].fail : fail_node.output;
      queue.push_back(next);
    }
  }
}

std::uint32_t Matcher::child(std::uint32_t state, std::uint32_t symbol) const {
  const auto& edges = nodes_[state].next;
  auto it = std::lower_bound(edges.begin(), edges.end(),
                             std::make_pair(symbol, 0u));
  return it != edges.end() && it->first == symbol ? it->second : kNone;
}

std::uint32_t Matcher::step(std::uint32_t state, std::uint32_t symbol) const {
  while (true) {
    std::uint32_t next = child(state, symbol);
    if (next != kNone) return next;
    if (state == 0) return 0;
    state = nodes_[state].fail;
  }
}

std::vector<Matcher::Match> Matcher::find(
    std::span<const std::string> tokens) const {
  std::vector<Match> matches;
  if (phrases_.empty() || tokens.empty()) return matches;

  // Longest phrase starting at each position.
  std::vector<std::uint32_t> best(tokens.size(), kNone);
  std::uint32_t state = 0;
  for (std::size_t pos = 0; pos < tokens.size(); ++pos) {
    auto sym = symbols_.find(tokens[pos]);
    if (sym == symbols_.end()) {
      state = 0;
      continue;
    }
    state = step(state, sym->second);
    std::uint32_t hit =
        nodes_[state].phrase != kNone ? state : nodes_[state].output;
    for (; hit != kNone; hit = nodes_[hit].output) {
      std::uint32_t phrase = nodes_[hit].phrase;
      std::size_t start = pos + 1 - phrases_[phrase].tokens.size();
      if (best[start] == kNone ||
          phrases_[best[start]].tokens.size() < phrases_[phrase].tokens.size()) {
        best[start] = phrase;
      }
    }
  }

  for (std::size_t start = 0; start < tokens.size();) {
    if (best[start] == kNone) {
      ++start;
      continue;
    }
    std::size_t end = start + phrases_[best[start]].tokens.size();
    matches.push_back(Match{start, end, best[start]});
    start = end;
  }
  return matches;
}

std::vector<Annotation> annotate(std::string_view doc_id, const CleanText& text,
                                 const Matcher& matcher) {
  std::vector<Annotation> out;
  for (std::size_t s = 0; s < text.sentences.size(); ++s) {
    for (const auto& m : matcher.find(text.sentences[s])) {
      const auto& phrase = matcher.phrases()[m.phrase];
      for (const auto& concept_id : phrase.concepts) {
        out.push_back(Annotation{std::string(doc_id), concept_id, phrase.text,
                                 s, m.start, m.end});
      }
    }
  }
  return out;
}

}  // namespace epl
