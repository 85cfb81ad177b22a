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
#ifndef EPL_TAXONOMY_HPP_
#define EPL_TAXONOMY_HPP_

#include <cstddef>
#include <filesystem>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "epl/normalize.hpp"

namespace epl {

// One taxonomy node.
struct Concept {
  std::string id;  // absolute IRI
  std::string pref_label;
  std::set<std::string> alt_labels;
  std::set<std::string> broader;  // IRIs of parent concepts

  bool operator==(const Concept&) const = default;
};

// An immutable, validated set of concepts. Every broader reference resolves
// inside the taxonomy and the broader relation has no cycle.
class Taxonomy {
 public:
  using ConceptMap = std::map<std::string, Concept, std::less<>>;

  Taxonomy() = default;

  // Validates and takes ownership. Throws ValidationError on duplicate IDs,
  // empty preferred labels, dangling broader IRIs or broader cycles.
  Taxonomy(std::vector<Concept> concepts, std::string source_uri);

  const Concept* find(std::string_view id) const;
  const ConceptMap& concepts() const { return concepts_; }
  const std::string& source_uri() const { return source_uri_; }

  std::size_t size() const { return concepts_.size(); }
  bool empty() const { return concepts_.empty(); }
  std::size_t label_count() const;
  std::size_t broader_edge_count() const;

  // Concept IRIs ordered so that each concept follows all of its broader
  // concepts. Ties are broken by IRI. Throws ValidationError on a cycle.
  std::vector<std::string> topological_order() const;

  bool operator==(const Taxonomy&) const = default;

 private:
  ConceptMap concepts_;
  std::string source_uri_;
};

struct SkosOptions {
  // Base for relative rdf:about / rdf:resource values when the document
  // declares no xml:base.
  std::string source_uri = "urn:epl:taxonomy";
  // Drop dangling broader edges with a warning instead of failing.
  bool lenient = false;
};

// Parses a SKOS RDF/XML document: one Concept per skos:Concept element,
// labels from skos:prefLabel / skos:altLabel, parents from skos:broader
// (and, inverted, from skos:narrower).
//
// Throws ParseError (position = byte offset) on malformed XML and
// ValidationError on duplicate concepts, missing labels, dangling broader
// IRIs (strict mode), cycles, or a document without any concept.
Taxonomy parse_skos(std::string_view bytes, const SkosOptions& options = {});

// Reads a file and parses it; source_uri defaults to the file's file:// URI.
Taxonomy load_skos_file(const std::filesystem::path& path, bool lenient = false);

// Maps a normalized phrase to the concepts carrying it as a label.
class PhraseLexicon {
 public:
  using Entries = std::map<Tokens, std::set<std::string>>;

  PhraseLexicon() = default;
  explicit PhraseLexicon(Entries entries);

  // Null when the phrase is not a key.
  const std::set<std::string>* lookup(const Tokens& phrase) const;
  const Entries& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

 private:
  Entries entries_;
};

struct LexiconOptions {
  std::size_t min_tokens = 1;
  // Raw phrases; they are normalized before comparison.
  std::vector<std::string> stoplist;
  bool include_alt_labels = true;
};

PhraseLexicon build_lexicon(const Taxonomy& taxonomy,
                            const LexiconOptions& options = {});

// One phrase per line; blank lines and lines starting with '#' are ignored.
std::vector<std::string> load_stoplist(const std::filesystem::path& path);

}  // namespace epl

#endif  // EPL_TAXONOMY_HPP_
