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
#ifndef EPL_SPARQL_HPP_
#define EPL_SPARQL_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "epl/rdf.hpp"

namespace epl {

// One position of a triple pattern: a variable or a constant term.
struct PatternSlot {
  std::optional<std::string> variable;  // name without '?'
  Term term;                            // meaningful when !variable

  static PatternSlot var(std::string name) { return {std::move(name), {}}; }
  static PatternSlot constant(Term t) { return {std::nullopt, std::move(t)}; }

  bool is_variable() const { return variable.has_value(); }
  bool operator==(const PatternSlot&) const = default;
};

struct TriplePattern {
  PatternSlot subject;
  PatternSlot predicate;
  PatternSlot object;

  bool operator==(const TriplePattern&) const = default;
};

// SELECT [DISTINCT] over a basic graph pattern, with LIMIT/OFFSET.
struct Query {
  std::map<std::string, std::string> prefixes;
  std::vector<std::string> variables;  // projection; all variables for '*'
  bool select_all = false;
  bool distinct = false;
  std::vector<TriplePattern> patterns;
  std::optional<std::size_t> limit;
  std::optional<std::size_t> offset;
};

// Parses the supported subset: PREFIX declarations, SELECT [DISTINCT]
// ?v... | *, [WHERE] { patterns separated by '.' }, IRIs, prefixed names,
// the 'a' shorthand, plain string literals, LIMIT and OFFSET.
//
// Throws ParseError (position = byte offset of the offending token) for
// syntax errors and unknown prefixes, and UnsupportedFeatureError for
// OPTIONAL, FILTER, UNION and other constructs outside the subset.
Query parse_sparql(std::string_view text);

struct ResultSet {
  std::vector<std::string> variables;
  std::vector<std::vector<Term>> rows;

  bool operator==(const ResultSet&) const = default;
};

struct EvalOptions {
  // Evaluate patterns in the most selective order; when false they run in
  // the order written.
  bool reorder_patterns = true;
  // Forces every pattern scan through one index (for testing).
  std::optional<TripleIndex> force_index;
};

// Joins the patterns, projects, applies DISTINCT, sorts rows by their
// terms, then applies OFFSET and LIMIT.
ResultSet evaluate(const Query& query, const Dataset& dataset,
                   const EvalOptions& options = {});

// Escapes a string for use inside a double-quoted SPARQL literal.
std::string sparql_escape_literal(std::string_view value);

}  // namespace epl

#endif  // EPL_SPARQL_HPP_
