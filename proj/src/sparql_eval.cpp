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
#include <algorithm>
#include <limits>
#include <tuple>

#include "epl/sparql.hpp"

namespace epl {
namespace {

constexpr TermId kUnbound = std::numeric_limits<TermId>::max();

// A pattern position after constants are mapped to term IDs.
struct CompiledSlot {
  int variable = -1;  // index into the binding vector, or -1
  TermId constant = kUnbound;
};

struct CompiledPattern {
  CompiledSlot s, p, o;
};

class Evaluator {
 public:
  Evaluator(const Dataset& dataset, std::vector<CompiledPattern> patterns,
            std::size_t variable_count, const EvalOptions& options)
      : dataset_(dataset),
        patterns_(std::move(patterns)),
        bindings_(variable_count, kUnbound),
        options_(options) {}

  template <typename Visit>
  void run(const Visit& visit) {
    if (options_.reorder_patterns) order_patterns();
    join(0, visit);
  }

 private:
  std::optional<TermId> value(const CompiledSlot& slot) const {
    if (slot.variable < 0) return slot.constant;
    TermId b = bindings_[static_cast<std::size_t>(slot.variable)];
    return b == kUnbound ? std::nullopt : std::optional<TermId>(b);
  }

  // Greedy static order: most bound positions first, then the smallest
  // constant-only candidate set, then the written order.
  void order_patterns() {
    std::vector<bool> bound(bindings_.size(), false);
    std::vector<CompiledPattern> remaining = patterns_;
    std::vector<CompiledPattern> ordered;
    while (!remaining.empty()) {
      std::size_t best = 0;
      std::tuple<int, std::size_t> best_key{-1, 0};
      for (std::size_t i = 0; i < remaining.size(); ++i) {
        const auto& pat = remaining[i];
        int bound_positions = 0;
        auto constant = [&](const CompiledSlot& s) -> std::optional<TermId> {
          if (s.variable < 0) {
            ++bound_positions;
            return s.constant;
          }
          if (bound[static_cast<std::size_t>(s.variable)]) ++bound_positions;
          return std::nullopt;
        };
        auto cs = constant(pat.s);
        auto cp = constant(pat.p);
        auto co = constant(pat.o);
        std::size_t candidates = dataset_.match(cs, cp, co).size();
        std::tuple<int, std::size_t> key{bound_positions,
                                         std::numeric_limits<std::size_t>::max() -
                                             candidates};
        if (key > best_key) {
          best_key = key;
          best = i;
        }
      }
      const auto& chosen = remaining[best];
      for (const auto* s : {&chosen.s, &chosen.p, &chosen.o}) {
        if (s->variable >= 0) bound[static_cast<std::size_t>(s->variable)] = true;
      }
      ordered.push_back(chosen);
      remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(best));
    }
    patterns_ = std::move(ordered);
  }

  // Binds slot to id; false on conflict. Records newly bound variables.
  bool bind(const CompiledSlot& slot, TermId id, std::vector<int>& fresh) {
    if (slot.variable < 0) return slot.constant == id;
    TermId& b = bindings_[static_cast<std::size_t>(slot.variable)];
    if (b == kUnbound) {
      b = id;
      fresh.push_back(slot.variable);
      return true;
    }
    return b == id;
  }

  template <typename Visit>
  void join(std::size_t depth, const Visit& visit) {
    if (depth == patterns_.size()) {
      visit(bindings_);
      return;
    }
    const CompiledPattern& pat = patterns_[depth];
    auto s = value(pat.s);
    auto p = value(pat.p);
    auto o = value(pat.o);
    auto candidates = options_.force_index
                          ? dataset_.scan(*options_.force_index, s, p, o)
                          : dataset_.match(s, p, o);
    std::vector<int> fresh;
    for (std::uint32_t pos : candidates) {
      const auto& t = dataset_.id_triples()[pos];
      bool ok = bind(pat.s, t.s, fresh) && bind(pat.p, t.p, fresh) &&
                bind(pat.o, t.o, fresh);
      if (ok) join(depth + 1, visit);
      for (int v : fresh) bindings_[static_cast<std::size_t>(v)] = kUnbound;
      fresh.clear();
    }
  }

  const Dataset& dataset_;
  std::vector<CompiledPattern> patterns_;
  std::vector<TermId> bindings_;
  EvalOptions options_;
};

}  // namespace

ResultSet evaluate(const Query& query, const Dataset& dataset,
                   const EvalOptions& options) {
  ResultSet result;
  result.variables = query.variables;

  std::vector<std::string> names;
  auto variable_index = [&](const std::string& name) {
    auto it = std::find(names.begin(), names.end(), name);
    if (it != names.end()) return static_cast<int>(it - names.begin());
    names.push_back(name);
    return static_cast<int>(names.size() - 1);
  };

  bool satisfiable = true;
  auto compile_slot = [&](const PatternSlot& slot) {
    CompiledSlot c;
    if (slot.is_variable()) {
      c.variable = variable_index(*slot.variable);
    } else if (auto id = dataset.id_of(slot.term)) {
      c.constant = *id;
    } else {
      satisfiable = false;
    }
    return c;
  };
  std::vector<CompiledPattern> compiled;
  for (const auto& p : query.patterns) {
    CompiledSlot s = compile_slot(p.subject);
    CompiledSlot pr = compile_slot(p.predicate);
    CompiledSlot o = compile_slot(p.object);
    compiled.push_back({s, pr, o});
  }
  std::vector<int> projection;
  for (const auto& v : query.variables) projection.push_back(variable_index(v));
  if (!satisfiable) return result;

  std::vector<std::vector<TermId>> rows;
  Evaluator evaluator(dataset, std::move(compiled), names.size(), options);
  evaluator.run([&](const std::vector<TermId>& bindings) {
    std::vector<TermId> row;
    row.reserve(projection.size());
    for (int v : projection) row.push_back(bindings[static_cast<std::size_t>(v)]);
    rows.push_back(std::move(row));
  });

  std::sort(rows.begin(), rows.end());
  if (query.distinct) rows.erase(std::unique(rows.begin(), rows.end()), rows.end());

  std::size_t begin = std::min(rows.size(), query.offset.value_or(0));
  std::size_t end = rows.size();
  if (query.limit && *query.limit < end - begin) end = begin + *query.limit;
  for (std::size_t i = begin; i < end; ++i) {
    std::vector<Term> row;
    row.reserve(rows[i].size());
    for (TermId id : rows[i]) row.push_back(dataset.term(id));
    result.rows.push_back(std::move(row));
  }
  return result;
}

}  // namespace epl
