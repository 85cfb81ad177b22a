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
#ifndef EPL_IRI_HPP_
#define EPL_IRI_HPP_

#include <string>
#include <string_view>

namespace epl {

// True for "scheme:rest" where scheme matches [A-Za-z][A-Za-z0-9+.-]* and the
// whole string has no characters that N-Triples forbids inside <...>.
bool is_absolute_iri(std::string_view iri);

// Resolves a reference against an absolute base. Handles absolute
// references, "#frag", "//authority", "/path" and relative paths; dot
// segments are not collapsed.
std::string resolve_iri(std::string_view base, std::string_view reference);

// Percent-encodes bytes that may not appear in an IRI (controls, space and
// <>"{}|\^`). Non-ASCII UTF-8 passes through.
std::string iri_escape(std::string_view text);

}  // namespace epl

#endif  // EPL_IRI_HPP_
