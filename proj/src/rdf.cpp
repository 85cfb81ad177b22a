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
#include "epl/rdf.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdio>
#include <tuple>

#include "epl/error.hpp"
#include "epl/iri.hpp"

namespace epl {
namespace {

bool forbidden_in_iri(unsigned char c) {
  return c <= 0x20 || c == '<' || c == '>' || c == '"' || c == '{' ||
         c == '}' || c == '|' || c == '\\' || c == '^' || c == '`';
}

std::size_t scheme_length(std::string_view iri) {
  if (iri.empty() || !std::isalpha(static_cast<unsigned char>(iri[0]))) return 0;
  for (std::size_t i = 1; i < iri.size(); ++i) {
    char c = iri[i];
    if (c == ':') return i;
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '+' && c != '-' &&
        c != '.') {
      return 0;
    }
  }
  return 0;
}

}  // namespace

bool is_absolute_iri(std::string_view iri) {
  if (scheme_length(iri) == 0) return false;
  return std::none_of(iri.begin(), iri.end(), [](char c) {
    return forbidden_in_iri(static_cast<unsigned char>(c));
  });
}

std::string resolve_iri(std::string_view base, std::string_view reference) {
  if (scheme_length(reference) != 0) return std::string(reference);
  std::string_view no_fragment = base.substr(0, base.find('#'));
  if (reference.empty()) return std::string(no_fragment);
  if (reference[0] == '#') return std::string(no_fragment) + std::string(reference);
  std::size_t scheme = scheme_length(base);
  if (reference.starts_with("//")) {
    return std::string(base.substr(0, scheme + 1)) + std::string(reference);
  }
  if (reference[0] == '/') {
    std::size_t path_start = scheme + 1;
    if (base.substr(path_start, 2) == "//") {
      path_start = base.find('/', path_start + 2);
      if (path_start == std::string_view::npos) path_start = base.size();
    }
    return std::string(base.substr(0, path_start)) + std::string(reference);
  }
  std::string_view no_query = no_fragment.substr(0, no_fragment.find('?'));
  std::size_t slash = no_query.rfind('/');
  if (slash == std::string_view::npos || slash < scheme) {
    return std::string(no_query) + "/" + std::string(reference);
  }
  return std::string(no_query.substr(0, slash + 1)) + std::string(reference);
}

std::string iri_escape(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char ch : text) {
    auto c = static_cast<unsigned char>(ch);
    if (c < 0x80 && forbidden_in_iri(c)) {
      char buf[4];
      std::snprintf(buf, sizeof buf, "%%%02X", c);
      out += buf;
    } else {
      out += ch;
    }
  }
  return out;
}

void validate_triple(const Triple& t) {
  if (!t.subject.is_iri() || !is_absolute_iri(t.subject.value)) {
    throw ValidationError("subject is not an absolute IRI: " + t.subject.value);
  }
  if (!t.predicate.is_iri() || !is_absolute_iri(t.predicate.value)) {
    throw ValidationError("predicate is not an absolute IRI: " +
                          t.predicate.value);
  }
  if (t.object.is_iri() && !is_absolute_iri(t.object.value)) {
    throw ValidationError("object is not an absolute IRI: " + t.object.value);
  }
}

Dataset::Dataset(std::vector<Triple> triples) : triples_(std::move(triples)) {
  for (const auto& t : triples_) validate_triple(t);
  std::sort(triples_.begin(), triples_.end());
  triples_.erase(std::unique(triples_.begin(), triples_.end()), triples_.end());

  terms_.reserve(triples_.size());
  for (const auto& t : triples_) {
    terms_.push_back(t.subject);
    terms_.push_back(t.predicate);
    terms_.push_back(t.object);
  }
  std::sort(terms_.begin(), terms_.end());
  terms_.erase(std::unique(terms_.begin(), terms_.end()), terms_.end());

  ids_.reserve(triples_.size());
  for (const auto& t : triples_) {
    ids_.push_back({*id_of(t.subject), *id_of(t.predicate), *id_of(t.object)});
  }
  auto permutation = [&](auto key) {
    std::vector<std::uint32_t> perm(ids_.size());
    for (std::uint32_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::sort(perm.begin(), perm.end(), [&](std::uint32_t a, std::uint32_t b) {
      return key(ids_[a]) < key(ids_[b]);
    });
    return perm;
  };
  spo_ = permutation([](const IdTriple& t) { return std::tie(t.s, t.p, t.o); });
  pos_ = permutation([](const IdTriple& t) { return std::tie(t.p, t.o, t.s); });
  osp_ = permutation([](const IdTriple& t) { return std::tie(t.o, t.s, t.p); });
}

std::optional<TermId> Dataset::id_of(const Term& term) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), term);
  if (it == terms_.end() || *it != term) return std::nullopt;
  return static_cast<TermId>(it - terms_.begin());
}

const std::vector<std::uint32_t>& Dataset::index(TripleIndex which) const {
  switch (which) {
    case TripleIndex::kSubject:
      return spo_;
    case TripleIndex::kPredicateObject:
      return pos_;
    case TripleIndex::kObject:
      return osp_;
  }
  return spo_;
}

std::span<const std::uint32_t> Dataset::scan(TripleIndex which,
                                             std::optional<TermId> s,
                                             std::optional<TermId> p,
                                             std::optional<TermId> o) const {
  // Key order of the chosen permutation.
  std::array<std::optional<TermId>, 3> key;
  std::array<int, 3> slot;  // 0 = s, 1 = p, 2 = o
  switch (which) {
    case TripleIndex::kSubject:
      key = {s, p, o};
      slot = {0, 1, 2};
      break;
    case TripleIndex::kPredicateObject:
      key = {p, o, s};
      slot = {1, 2, 0};
      break;
    case TripleIndex::kObject:
      key = {o, s, p};
      slot = {2, 0, 1};
      break;
  }
  std::size_t prefix = 0;
  while (prefix < 3 && key[prefix]) ++prefix;

  const auto& perm = index(which);
  auto component = [&](std::uint32_t pos, int k) {
    const IdTriple& t = ids_[pos];
    return slot[k] == 0 ? t.s : slot[k] == 1 ? t.p : t.o;
  };
  auto less_than_key = [&](std::uint32_t pos, int) {
    for (std::size_t k = 0; k < prefix; ++k) {
      TermId v = component(pos, static_cast<int>(k));
      if (v != *key[k]) return v < *key[k];
    }
    return false;
  };
  auto key_less_than = [&](int, std::uint32_t pos) {
    for (std::size_t k = 0; k < prefix; ++k) {
      TermId v = component(pos, static_cast<int>(k));
      if (v != *key[k]) return *key[k] < v;
    }
    return false;
  };
  auto lo = std::lower_bound(perm.begin(), perm.end(), 0, less_than_key);
  auto hi = std::upper_bound(lo, perm.end(), 0, key_less_than);
  return {perm.data() + (lo - perm.begin()), static_cast<std::size_t>(hi - lo)};
}

std::span<const std::uint32_t> Dataset::match(std::optional<TermId> s,
                                              std::optional<TermId> p,
                                              std::optional<TermId> o) const {
  TripleIndex which = TripleIndex::kSubject;
  if (s && !p && o) {
    which = TripleIndex::kObject;
  } else if (!s && p) {
    which = TripleIndex::kPredicateObject;
  } else if (!s && !p && o) {
    which = TripleIndex::kObject;
  }
  return scan(which, s, p, o);
}

}  // namespace epl
