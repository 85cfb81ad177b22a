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
#include "epl/textproc.hpp"

#include <cctype>

namespace epl {
namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

std::string_view trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && is_space(s[b])) ++b;
  while (e > b && is_space(s[e - 1])) --e;
  return s.substr(b, e - b);
}

// True when s[i] is '\n' and only spaces/tabs/CR separate it from another
// '\n'; end receives the index just past that second newline.
bool blank_line_at(std::string_view s, std::size_t i, std::size_t& end) {
  if (s[i] != '\n') return false;
  for (std::size_t j = i + 1; j < s.size(); ++j) {
    if (s[j] == '\n') {
      end = j + 1;
      return true;
    }
    if (s[j] != ' ' && s[j] != '\t' && s[j] != '\r') return false;
  }
  return false;
}

}  // namespace

std::size_t CleanText::token_count() const {
  std::size_t n = 0;
  for (const auto& s : sentences) n += s.size();
  return n;
}

std::vector<std::string> split_sentences(std::string_view text) {
  std::vector<std::string> out;
  auto emit = [&](std::string_view segment) {
    segment = trim(segment);
    if (!segment.empty()) out.emplace_back(segment);
  };
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    std::size_t blank_end = 0;
    if ((c == '.' || c == '!' || c == '?') && i + 1 < text.size() &&
        is_space(text[i + 1])) {
      emit(text.substr(start, i + 1 - start));
      start = i + 1;
    } else if (blank_line_at(text, i, blank_end)) {
      emit(text.substr(start, i - start));
      start = blank_end;
      i = blank_end - 1;
    }
  }
  emit(text.substr(start));
  return out;
}

CleanText make_clean_text(std::string_view plain_text) {
  CleanText clean;
  clean.char_len = plain_text.size();
  for (const auto& sentence : split_sentences(plain_text)) {
    Tokens tokens = tokenize(sentence);
    if (!tokens.empty()) clean.sentences.push_back(std::move(tokens));
  }
  return clean;
}

}  // namespace epl
