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
#ifndef EPL_GRAPH_HPP_
#define EPL_GRAPH_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "epl/ingest.hpp"
#include "epl/matcher.hpp"
#include "epl/rdf.hpp"
#include "epl/taxonomy.hpp"

namespace epl {

inline constexpr std::string_view kDefaultBaseIri =
    "http://purl.example/expert-pivot#";
inline constexpr std::string_view kSkosNamespace =
    "http://www.w3.org/2004/02/skos/core#";

// Predicate IRIs used for the link graph.
struct Vocabulary {
  std::string base{kDefaultBaseIri};

  std::string title() const { return base + "title"; }
  std::string source() const { return base + "source"; }
  std::string url() const { return base + "url"; }
  std::string team() const { return base + "team"; }
  std::string mentions_concept() const { return base + "mentionsConcept"; }
  static std::string pref_label() {
    return std::string(kSkosNamespace) + "prefLabel";
  }
};

// Document metadata, without its text.
struct DocumentInfo {
  std::string doc_id;
  Source source = Source::kWikipedia;
  std::string title;
  std::string url;  // also the document's subject IRI
  std::optional<std::string> team;

  static DocumentInfo of(const Document& doc);
};

struct GraphSummary {
  std::size_t wiki_documents = 0;
  std::size_t expert_documents = 0;
  std::size_t pages_tagged = 0;        // wiki documents with >= 1 concept
  std::size_t expert_docs_tagged = 0;  // expert documents with >= 1 concept
  std::size_t concepts_used = 0;       // distinct concepts linked to any doc
  std::size_t links = 0;               // distinct (doc, concept) pairs
};

// Accumulates documents and annotations, then emits the link graph:
//   doc title/source/url (and team for expert docs) literals,
//   one mentionsConcept edge per distinct (doc, concept),
//   skos:prefLabel for each referenced concept.
class GraphBuilder {
 public:
  GraphBuilder(const Taxonomy& taxonomy, Vocabulary vocabulary = {});

  // Throws ValidationError on a duplicate doc_id or url, a non-IRI url, or a team
  // that is missing (expert) or present (wikipedia).
  void add_document(const DocumentInfo& doc);

  // Throws ValidationError when an annotation names an unknown document or
  // concept.
  void add_annotations(std::span<const Annotation> annotations);

  GraphSummary summary() const;
  Dataset build() const;

 private:
  const Taxonomy& taxonomy_;
  Vocabulary vocabulary_;
  std::map<std::string, DocumentInfo, std::less<>> documents_;
  std::map<std::string, std::set<std::string>, std::less<>> links_;
  std::set<std::string> urls_;
};

// Convenience over GraphBuilder. Annotations in wiki_annotations must cite
// wikipedia documents and those in expert_annotations expert documents.
Dataset build_graph(std::span<const Annotation> wiki_annotations,
                    std::span<const Annotation> expert_annotations,
                    std::span<const DocumentInfo> documents,
                    const Taxonomy& taxonomy, const Vocabulary& vocabulary = {});

// The SELECT DISTINCT ?concept ?label ?team ?doc query that joins a
// Wikipedia page to expert documents through shared concepts.
std::string canonical_experts_query(std::string_view title,
                                    const Vocabulary& vocabulary = {});

}  // namespace epl

#endif  // EPL_GRAPH_HPP_
