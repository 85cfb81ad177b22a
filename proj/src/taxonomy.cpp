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
#include "epl/taxonomy.hpp"

#include <expat.h>
#include <spdlog/spdlog.h>

#include <algorithm>
#include <optional>
#include <queue>
#include <sstream>
#include <utility>

#include "epl/error.hpp"
#include "epl/file_util.hpp"
#include "epl/iri.hpp"

namespace epl {
namespace {

constexpr char kNsSeparator = '|';
constexpr std::string_view kRdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
constexpr std::string_view kSkos = "http://www.w3.org/2004/02/skos/core#";
constexpr std::string_view kXml = "http://www.w3.org/XML/1998/namespace";

std::string qualified(std::string_view ns, std::string_view local) {
  std::string out(ns);
  out += kNsSeparator;
  out += local;
  return out;
}

const std::string kConcept = qualified(kSkos, "Concept");
const std::string kPrefLabel = qualified(kSkos, "prefLabel");
const std::string kAltLabel = qualified(kSkos, "altLabel");
const std::string kBroader = qualified(kSkos, "broader");
const std::string kNarrower = qualified(kSkos, "narrower");
const std::string kAbout = qualified(kRdf, "about");
const std::string kResource = qualified(kRdf, "resource");
const std::string kXmlBase = qualified(kXml, "base");
const std::string kXmlLang = qualified(kXml, "lang");

std::string trim(std::string_view s) {
  const char* ws = " \t\r\n\f\v";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return std::string(s.substr(b, e - b + 1));
}

const char* find_attr(const XML_Char** attrs, const std::string& name) {
  for (int i = 0; attrs[i] != nullptr; i += 2) {
    if (name == attrs[i]) return attrs[i + 1];
  }
  return nullptr;
}

struct PendingConcept {
  std::string id;
  std::optional<std::string> pref_label;
  bool pref_label_preferred_lang = false;
  std::set<std::string> alt_labels;
  std::set<std::string> broader;
  std::set<std::string> narrower;
};

enum class TextTarget { kNone, kPrefLabel, kAltLabel };

class SkosHandler {
 public:
  explicit SkosHandler(std::string source_uri)
      : source_uri_(std::move(source_uri)) {}

  void start(const XML_Char* name, const XML_Char** attrs) {
    std::string base = bases_.empty() ? source_uri_ : bases_.back();
    if (const char* b = find_attr(attrs, kXmlBase)) base = resolve_iri(base, b);
    bases_.push_back(base);
    element_path_.emplace_back(name);

    if (kConcept == name) {
      const char* about = find_attr(attrs, kAbout);
      if (about == nullptr) {
        throw ValidationError("skos:Concept without rdf:about at element " +
                              std::to_string(concept_elements_ + 1));
      }
      ++concept_elements_;
      std::string id = resolve_iri(base, about);
      if (!stack_.empty() && element_path_.size() >= 2) {
        // <skos:broader><skos:Concept rdf:about=.../></skos:broader>
        link(stack_.back(), element_path_[element_path_.size() - 2], id);
      }
      stack_.push_back(PendingConcept{});
      stack_.back().id = std::move(id);
      return;
    }
    if (stack_.empty()) return;
    PendingConcept& current = stack_.back();
    if (kPrefLabel == name || kAltLabel == name) {
      target_ = kPrefLabel == name ? TextTarget::kPrefLabel : TextTarget::kAltLabel;
      const char* lang = find_attr(attrs, kXmlLang);
      std::string_view l = lang ? lang : "";
      label_lang_preferred_ = l.empty() || l == "en" || l.starts_with("en-");
      text_.clear();
    } else if (kBroader == name || kNarrower == name) {
      if (const char* res = find_attr(attrs, kResource)) {
        link(current, name, resolve_iri(base, res));
      }
    }
  }

  void end(const XML_Char* name) {
    bases_.pop_back();
    element_path_.pop_back();
    if (kConcept == name) {
      finished_.push_back(std::move(stack_.back()));
      stack_.pop_back();
      return;
    }
    if (stack_.empty() || target_ == TextTarget::kNone) return;
    if (kPrefLabel != name && kAltLabel != name) return;
    PendingConcept& current = stack_.back();
    std::string label = trim(text_);
    if (target_ == TextTarget::kAltLabel) {
      if (!label.empty()) current.alt_labels.insert(std::move(label));
    } else if (!current.pref_label ||
               (label_lang_preferred_ && !current.pref_label_preferred_lang)) {
      current.pref_label = std::move(label);
      current.pref_label_preferred_lang = label_lang_preferred_;
    }
    target_ = TextTarget::kNone;
  }

  void text(const XML_Char* s, int len) {
    if (target_ != TextTarget::kNone) text_.append(s, static_cast<size_t>(len));
  }

  std::vector<PendingConcept> take() { return std::move(finished_); }
  std::size_t concept_elements() const { return concept_elements_; }

 private:
  static void link(PendingConcept& c, std::string_view relation,
                   std::string target) {
    if (relation == kBroader) {
      c.broader.insert(std::move(target));
    } else if (relation == kNarrower) {
      c.narrower.insert(std::move(target));
    }
  }

  std::string source_uri_;
  std::vector<std::string> bases_;
  std::vector<std::string> element_path_;
  std::vector<PendingConcept> stack_;
  std::vector<PendingConcept> finished_;
  TextTarget target_ = TextTarget::kNone;
  bool label_lang_preferred_ = false;
  std::string text_;
  std::size_t concept_elements_ = 0;
};

// Checks IDs and labels; in lenient mode removes dangling broader edges.
void check_concepts(std::vector<Concept>& concepts, bool lenient) {
  std::set<std::string_view> ids;
  for (const auto& c : concepts) {
    if (c.id.empty()) throw ValidationError("concept with empty IRI");
    if (!ids.insert(c.id).second) {
      throw ValidationError("duplicate concept IRI: " + c.id);
    }
    if (trim(c.pref_label).empty()) {
      throw ValidationError("concept without prefLabel: " + c.id);
    }
  }
  std::vector<std::string> dangling;
  for (auto& c : concepts) {
    for (auto it = c.broader.begin(); it != c.broader.end();) {
      if (ids.count(*it) != 0) {
        ++it;
        continue;
      }
      dangling.push_back(c.id + " -> " + *it);
      it = lenient ? c.broader.erase(it) : std::next(it);
    }
  }
  if (dangling.empty()) return;
  if (lenient) {
    for (const auto& d : dangling) spdlog::warn("dangling broader edge {}", d);
    return;
  }
  std::ostringstream msg;
  msg << dangling.size() << " dangling broader edge(s):";
  for (std::size_t i = 0; i < dangling.size() && i < 20; ++i) {
    msg << "\n  " << dangling[i];
  }
  if (dangling.size() > 20) msg << "\n  ...";
  throw ValidationError(msg.str());
}

Taxonomy build_taxonomy(std::vector<Concept> concepts, std::string source_uri,
                        bool lenient) {
  check_concepts(concepts, lenient);
  return Taxonomy(std::move(concepts), std::move(source_uri));
}

}  // namespace

Taxonomy::Taxonomy(std::vector<Concept> concepts, std::string source_uri)
    : source_uri_(std::move(source_uri)) {
  check_concepts(concepts, /*lenient=*/false);
  for (auto& c : concepts) {
    c.pref_label = trim(c.pref_label);
    std::string id = c.id;
    concepts_.emplace(std::move(id), std::move(c));
  }
  topological_order();
}

const Concept* Taxonomy::find(std::string_view id) const {
  auto it = concepts_.find(id);
  return it == concepts_.end() ? nullptr : &it->second;
}

std::size_t Taxonomy::label_count() const {
  std::size_t n = 0;
  for (const auto& [id, c] : concepts_) n += 1 + c.alt_labels.size();
  return n;
}

std::size_t Taxonomy::broader_edge_count() const {
  std::size_t n = 0;
  for (const auto& [id, c] : concepts_) n += c.broader.size();
  return n;
}

std::vector<std::string> Taxonomy::topological_order() const {
  // Kahn's algorithm over parent -> child edges; the min-heap on IRIs makes
  // the order deterministic.
  std::map<std::string_view, std::size_t> pending_parents;
  std::map<std::string_view, std::vector<std::string_view>> children;
  for (const auto& [id, c] : concepts_) {
    pending_parents[id] = c.broader.size();
    for (const auto& parent : c.broader) children[parent].push_back(id);
  }
  std::priority_queue<std::string_view, std::vector<std::string_view>,
                      std::greater<>>
      ready;
  for (const auto& [id, n] : pending_parents) {
    if (n == 0) ready.push(id);
  }
  std::vector<std::string> order;
  order.reserve(concepts_.size());
  while (!ready.empty()) {
    std::string_view id = ready.top();
    ready.pop();
    order.emplace_back(id);
    for (std::string_view child : children[id]) {
      if (--pending_parents[child] == 0) ready.push(child);
    }
  }
  if (order.size() != concepts_.size()) {
    std::ostringstream msg;
    msg << "broader relation has a cycle among "
        << concepts_.size() - order.size() << " concept(s), e.g.";
    int shown = 0;
    for (const auto& [id, n] : pending_parents) {
      if (n == 0) continue;
      msg << ' ' << id;
      if (++shown == 5) break;
    }
    throw ValidationError(msg.str());
  }
  return order;
}

Taxonomy parse_skos(std::string_view bytes, const SkosOptions& options) {
  XML_Parser parser = XML_ParserCreateNS(nullptr, kNsSeparator);
  if (parser == nullptr) throw Error("cannot allocate XML parser");
  std::unique_ptr<XML_ParserStruct, decltype(&XML_ParserFree)> guard(
      parser, &XML_ParserFree);

  SkosHandler handler(options.source_uri);
  std::optional<ValidationError> handler_error;
  struct Context {
    SkosHandler* handler;
    std::optional<ValidationError>* error;
    XML_Parser parser;
  } ctx{&handler, &handler_error, parser};

  XML_SetUserData(parser, &ctx);
  XML_SetElementHandler(
      parser,
      [](void* data, const XML_Char* name, const XML_Char** attrs) {
        auto* c = static_cast<Context*>(data);
        try {
          c->handler->start(name, attrs);
        } catch (const ValidationError& e) {
          c->error->emplace(e);
          XML_StopParser(c->parser, XML_FALSE);
        }
      },
      [](void* data, const XML_Char* name) {
        static_cast<Context*>(data)->handler->end(name);
      });
  XML_SetCharacterDataHandler(
      parser, [](void* data, const XML_Char* s, int len) {
        static_cast<Context*>(data)->handler->text(s, len);
      });

  // Feed in chunks so inputs above INT_MAX bytes still work.
  constexpr std::size_t kChunk = 1 << 20;
  std::size_t offset = 0;
  do {
    std::size_t n = std::min(kChunk, bytes.size() - offset);
    bool last = offset + n == bytes.size();
    if (XML_Parse(parser, bytes.data() + offset, static_cast<int>(n),
                  last ? XML_TRUE : XML_FALSE) == XML_STATUS_ERROR) {
      if (handler_error) throw *handler_error;
      auto at = static_cast<std::size_t>(XML_GetCurrentByteIndex(parser));
      throw ParseError("malformed XML at byte " + std::to_string(at) + ": " +
                           XML_ErrorString(XML_GetErrorCode(parser)),
                       at);
    }
    offset += n;
  } while (offset < bytes.size());

  std::vector<PendingConcept> pending = handler.take();
  if (pending.empty()) {
    throw ValidationError("no skos:Concept elements in " + options.source_uri);
  }

  std::map<std::string, std::size_t> index;
  std::vector<Concept> concepts;
  concepts.reserve(pending.size());
  for (auto& p : pending) {
    if (!p.pref_label || p.pref_label->empty()) {
      throw ValidationError("concept without prefLabel: " + p.id);
    }
    if (!index.emplace(p.id, concepts.size()).second) {
      throw ValidationError("duplicate concept IRI: " + p.id);
    }
    Concept c;
    c.id = p.id;
    c.pref_label = std::move(*p.pref_label);
    c.alt_labels = std::move(p.alt_labels);
    c.broader = std::move(p.broader);
    concepts.push_back(std::move(c));
  }
  // skos:narrower is the inverse of skos:broader.
  std::vector<std::string> dangling_narrower;
  for (const auto& p : pending) {
    for (const auto& child : p.narrower) {
      auto it = index.find(child);
      if (it == index.end()) {
        dangling_narrower.push_back(p.id + " narrower " + child);
        continue;
      }
      concepts[it->second].broader.insert(p.id);
    }
  }
  if (!dangling_narrower.empty()) {
    if (!options.lenient) {
      throw ValidationError(std::to_string(dangling_narrower.size()) +
                            " dangling narrower edge(s), first: " +
                            dangling_narrower.front());
    }
    for (const auto& d : dangling_narrower) {
      spdlog::warn("dangling narrower edge {}", d);
    }
  }
  return build_taxonomy(std::move(concepts), options.source_uri,
                        options.lenient);
}

Taxonomy load_skos_file(const std::filesystem::path& path, bool lenient) {
  SkosOptions options;
  options.source_uri = file_uri(path);
  options.lenient = lenient;
  return parse_skos(read_file(path), options);
}

PhraseLexicon::PhraseLexicon(Entries entries) : entries_(std::move(entries)) {
  for (auto it = entries_.begin(); it != entries_.end();) {
    it = it->second.empty() || it->first.empty() ? entries_.erase(it)
                                                 : std::next(it);
  }
}

const std::set<std::string>* PhraseLexicon::lookup(const Tokens& phrase) const {
  auto it = entries_.find(phrase);
  return it == entries_.end() ? nullptr : &it->second;
}

PhraseLexicon build_lexicon(const Taxonomy& taxonomy,
                            const LexiconOptions& options) {
  std::set<Tokens> stop;
  for (const auto& phrase : options.stoplist) {
    Tokens t = normalize_label(phrase);
    if (!t.empty()) stop.insert(std::move(t));
  }
  const std::size_t min_tokens = std::max<std::size_t>(1, options.min_tokens);

  PhraseLexicon::Entries entries;
  auto add = [&](const std::string& label, const std::string& id) {
    Tokens key = normalize_label(label);
    if (key.size() < min_tokens || stop.count(key) != 0) return;
    entries[std::move(key)].insert(id);
  };
  for (const auto& [id, c] : taxonomy.concepts()) {
    add(c.pref_label, id);
    if (!options.include_alt_labels) continue;
    for (const auto& alt : c.alt_labels) add(alt, id);
  }
  return PhraseLexicon(std::move(entries));
}

std::vector<std::string> load_stoplist(const std::filesystem::path& path) {
  std::istringstream in(read_file(path));
  std::vector<std::string> phrases;
  for (std::string line; std::getline(in, line);) {
    std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    phrases.push_back(std::move(t));
  }
  return phrases;
}

}  // namespace epl
