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

#ifndef EPL_NORMALIZE_HPP_
#define EPL_NORMALIZE_HPP_

#include <string>
#include <string_view>
#include <vector>

namespace epl {

using Tokens = std::vector<std::string>;

// The single normalizer shared by taxonomy labels and document text.
//
// Input is UTF-8. The text is NFC-normalized and lowercased; a token is a
// maximal run of letters, digits and combining marks. Everything else
// (whitespace, hyphens, punctuation, symbols) separates tokens, so no token
// is ever empty. Invalid UTF-8 sequences act as separators.
Tokens normalize_label(std::string_view label);

// Joins tokens with single spaces.
std::string join_tokens(const Tokens& tokens);

}  // namespace epl

#endif  // EPL_NORMALIZE_HPP_
