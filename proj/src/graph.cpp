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
#include "epl/graph.hpp"

#include "epl/error.hpp"
#include "epl/iri.hpp"
#include "epl/sparql.hpp"

namespace epl {

DocumentInfo DocumentInfo::of(const Document& doc) {
  return {doc.doc_id, doc.source, doc.title, doc.url, doc.team};
}

GraphBuilder::GraphBuilder(const Taxonomy& taxonomy, Vocabulary vocabulary)
    : taxonomy_(taxonomy), vocabulary_(std::move(vocabulary)) {
  if (!is_absolute_iri(vocabulary_.base)) {
    throw ValidationError("base IRI is not absolute: " + vocabulary_.base);
  }
}

void GraphBuilder::add_document(const DocumentInfo& doc) {
  if (!is_absolute_iri(doc.url)) {
    throw ValidationError("document " + doc.doc_id +
                          " has a non-IRI url: " + doc.url);
  }
  if (doc.team.has_value() != (doc.source == Source::kExpert)) {
    throw ValidationError("document " + doc.doc_id +
                          ": team must be set exactly for expert documents");
  }
  if (documents_.find(doc.doc_id) != documents_.end()) {
    throw ValidationError("duplicate document id: " + doc.doc_id);
  }
  // The url doubles as the subject IRI.
  if (!urls_.insert(doc.url).second) {
    throw ValidationError("duplicate document url: " + doc.url);
  }
  documents_.emplace(doc.doc_id, doc);
}

void GraphBuilder::add_annotations(std::span<const Annotation> annotations) {
  for (const auto& a : annotations) {
    if (documents_.find(a.doc_id) == documents_.end()) {
      throw ValidationError("annotation cites unknown document: " + a.doc_id);
    }
    if (taxonomy_.find(a.concept_id) == nullptr) {
      throw ValidationError("annotation cites unknown concept: " + a.concept_id);
    }
    links_[a.doc_id].insert(a.concept_id);
  }
}

GraphSummary GraphBuilder::summary() const {
  GraphSummary s;
  std::set<std::string_view> concepts;
  for (const auto& [id, doc] : documents_) {
    bool wiki = doc.source == Source::kWikipedia;
    ++(wiki ? s.wiki_documents : s.expert_documents);
    auto it = links_.find(id);
    if (it == links_.end() || it->second.empty()) continue;
    ++(wiki ? s.pages_tagged : s.expert_docs_tagged);
    s.links += it->second.size();
    concepts.insert(it->second.begin(), it->second.end());
  }
  s.concepts_used = concepts.size();
  return s;
}

Dataset GraphBuilder::build() const {
  std::vector<Triple> triples;
  const Term title = Term::iri(vocabulary_.title());
  const Term source = Term::iri(vocabulary_.source());
  const Term url = Term::iri(vocabulary_.url());
  const Term team = Term::iri(vocabulary_.team());
  const Term mentions = Term::iri(vocabulary_.mentions_concept());
  const Term pref_label = Term::iri(Vocabulary::pref_label());

  std::set<std::string_view> referenced;
  for (const auto& [id, doc] : documents_) {
    Term subject = Term::iri(doc.url);
    triples.push_back({subject, title, Term::literal(doc.title)});
    triples.push_back(
        {subject, source, Term::literal(std::string(source_name(doc.source)))});
    triples.push_back({subject, url, Term::literal(doc.url)});
    if (doc.team) triples.push_back({subject, team, Term::literal(*doc.team)});
    auto it = links_.find(id);
    if (it == links_.end()) continue;
    for (const auto& concept_id : it->second) {
      triples.push_back({subject, mentions, Term::iri(concept_id)});
      referenced.insert(concept_id);
    }
  }
  for (std::string_view concept_id : referenced) {
    const Concept* c = taxonomy_.find(concept_id);
    triples.push_back({Term::iri(c->id), pref_label, Term::literal(c->pref_label)});
  }
  return Dataset(std::move(triples));
}

Dataset build_graph(std::span<const Annotation> wiki_annotations,
                    std::span<const Annotation> expert_annotations,
                    std::span<const DocumentInfo> documents,
                    const Taxonomy& taxonomy, const Vocabulary& vocabulary) {
  GraphBuilder builder(taxonomy, vocabulary);
  std::map<std::string_view, Source> sources;
  for (const auto& doc : documents) {
    builder.add_document(doc);
    sources[doc.doc_id] = doc.source;
  }
  auto check = [&](std::span<const Annotation> annotations, Source expected) {
    for (const auto& a : annotations) {
      auto it = sources.find(a.doc_id);
      if (it != sources.end() && it->second != expected) {
        throw ValidationError("annotation for " + a.doc_id + " is in the " +
                              std::string(source_name(expected)) + " list");
      }
    }
  };
  check(wiki_annotations, Source::kWikipedia);
  check(expert_annotations, Source::kExpert);
  builder.add_annotations(wiki_annotations);
  builder.add_annotations(expert_annotations);
  return builder.build();
}

std::string canonical_experts_query(std::string_view title,
                                    const Vocabulary& vocabulary) {
  std::string q;
  q += "PREFIX epl: <" + vocabulary.base + ">\n";
  q += "PREFIX skos: <" + std::string(kSkosNamespace) + ">\n";
  q += "SELECT DISTINCT ?concept ?label ?team ?doc WHERE {\n";
  q += "  ?page epl:title \"" + sparql_escape_literal(title) +
       "\" . ?page epl:source \"wikipedia\" .\n";
  q += "  ?page epl:mentionsConcept ?concept . ?concept skos:prefLabel ?label .\n";
  q += "  ?doc epl:mentionsConcept ?concept . ?doc epl:source \"expert\" .\n";
  q += "  ?doc epl:team ?team . }\n";
  return q;
}

}  // namespace epl
