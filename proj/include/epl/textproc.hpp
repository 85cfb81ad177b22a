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
#ifndef EPL_TEXTPROC_HPP_
#define EPL_TEXTPROC_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "epl/normalize.hpp"

namespace epl {

// Sentence-split, tokenized text. No sentence is empty and every token is a
// non-empty normalized token.
struct CleanText {
  std::vector<Tokens> sentences;
  std::size_t char_len = 0;  // bytes of the plain text the tokens came from

  std::size_t token_count() const;
  bool operator==(const CleanText&) const = default;
};

// Visible text of an HTML page. script/style contents and navigation
// furniture (nav, header, footer, aside, and elements whose id or class
// names a menu, navbar, breadcrumb, sidebar, header or footer) are dropped,
// tags removed, entities decoded. Block-level boundaries become blank lines.
// Never fails: malformed markup degrades to tag stripping.
std::string strip_boilerplate(std::string_view html);

// Contents of the first <title> element, whitespace-collapsed; empty if none.
std::string extract_html_title(std::string_view html);

// Decodes &name; &#NN; and &#xHH; references. Unknown references are kept.
std::string decode_entities(std::string_view text);

// Plain text of MediaWiki markup: templates removed (nesting-aware), links
// reduced to their display text, emphasis quotes, comments and <ref>
// elements removed, headings reduced to their text. An unclosed template
// is removed up to the end of its line.
std::string strip_wikitext(std::string_view wikitext);

// Splits after '.', '!' or '?' when followed by whitespace, and at blank
// lines. Segments are trimmed; empty segments are dropped.
std::vector<std::string> split_sentences(std::string_view text);

// Same algorithm as normalize_label.
inline Tokens tokenize(std::string_view sentence) {
  return normalize_label(sentence);
}

// split_sentences + tokenize, dropping sentences without tokens.
CleanText make_clean_text(std::string_view plain_text);

}  // namespace epl

#endif  // EPL_TEXTPROC_HPP_
