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
#ifndef EPL_RDF_HPP_
#define EPL_RDF_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace epl {

// An IRI or a plain literal. Terms order by kind (IRIs first), then value.
struct Term {
  enum class Kind : std::uint8_t { kIri, kLiteral };

  Kind kind = Kind::kIri;
  std::string value;

  static Term iri(std::string value) { return {Kind::kIri, std::move(value)}; }
  static Term literal(std::string value) {
    return {Kind::kLiteral, std::move(value)};
  }

  bool is_iri() const { return kind == Kind::kIri; }
  bool is_literal() const { return kind == Kind::kLiteral; }

  auto operator<=>(const Term&) const = default;
};

struct Triple {
  Term subject;
  Term predicate;
  Term object;

  auto operator<=>(const Triple&) const = default;
};

// Throws ValidationError unless subject and predicate are absolute IRIs and
// an IRI object is absolute.
void validate_triple(const Triple& triple);

using TermId = std::uint32_t;

// Which sorted permutation of the triples a scan walks.
enum class TripleIndex { kSubject, kPredicateObject, kObject };

// Immutable set of triples with a term dictionary and three sorted access
// paths: (s,p,o), (p,o,s) and (o,s,p). Any combination of bound positions
// is a prefix of one of them. Term IDs follow Term order, so sorting by ID
// sorts by term.
class Dataset {
 public:
  struct IdTriple {
    TermId s, p, o;
    auto operator<=>(const IdTriple&) const = default;
  };

  Dataset() = default;
  // Validates every triple and removes duplicates.
  explicit Dataset(std::vector<Triple> triples);

  std::size_t size() const { return triples_.size(); }
  bool empty() const { return triples_.empty(); }
  // Sorted, duplicate free.
  const std::vector<Triple>& triples() const { return triples_; }
  const std::vector<IdTriple>& id_triples() const { return ids_; }

  std::optional<TermId> id_of(const Term& term) const;
  const Term& term(TermId id) const { return terms_[id]; }
  std::size_t term_count() const { return terms_.size(); }

  // Positions (into id_triples()) of the triples matching the bound
  // components, from the index whose prefix covers them.
  std::span<const std::uint32_t> match(std::optional<TermId> s,
                                       std::optional<TermId> p,
                                       std::optional<TermId> o) const;

  // Candidates from a specific index, using the longest prefix of bound
  // components that index supports. Callers must still filter.
  std::span<const std::uint32_t> scan(TripleIndex index,
                                      std::optional<TermId> s,
                                      std::optional<TermId> p,
                                      std::optional<TermId> o) const;

  const std::vector<std::uint32_t>& index(TripleIndex which) const;

  bool operator==(const Dataset& other) const {
    return triples_ == other.triples_;
  }

 private:
  std::vector<Triple> triples_;
  std::vector<Term> terms_;
  std::vector<IdTriple> ids_;
  std::vector<std::uint32_t> spo_, pos_, osp_;
};

// Canonical N-Triples: one line per triple, sorted bytewise, every line
// ending in " .\n". Literals escape '"', '\\' and control characters.
std::string serialize_ntriples(const Dataset& dataset);

// Inverse of serialize_ntriples; also accepts comments, blank lines and
// \u / \U escapes. Throws ParseError whose position is the 1-based line
// number. Blank nodes, language tags and datatypes are rejected.
Dataset parse_ntriples(std::string_view text);

// Term in N-Triples syntax: <iri> or "escaped literal".
std::string to_ntriples(const Term& term);

}  // namespace epl

#endif  // EPL_RDF_HPP_
