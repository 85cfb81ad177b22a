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
#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "epl/error.hpp"
#include "epl/graph.hpp"
#include "epl/sparql.hpp"
#include "support/oracles.hpp"

namespace epl {
namespace {

constexpr char kEx[] = "http://example.org/";

Term ex(const std::string& local) { return Term::iri(kEx + local); }

Triple t(const std::string& s, const std::string& p, Term o) {
  return {ex(s), ex(p), std::move(o)};
}

ResultSet run(const std::string& text, const Dataset& d, const EvalOptions& options = {}) {
  return evaluate(parse_sparql(text), d, options);
}

TEST(ParseSparql, CanonicalExpertsQuery) {
  Query q = parse_sparql(canonical_experts_query("Kriging"));
  EXPECT_EQ(q.patterns.size(), 7u);
  EXPECT_TRUE(q.distinct);
  EXPECT_EQ(q.variables, (std::vector<std::string>{"concept", "label", "team", "doc"}));
  EXPECT_EQ(q.prefixes.at("epl"), "http://purl.example/expert-pivot#");
  EXPECT_EQ(q.patterns[0].object, PatternSlot::constant(Term::literal("Kriging")));
  EXPECT_EQ(q.patterns[3].predicate,
            PatternSlot::constant(Term::iri("http://www.w3.org/2004/02/skos/core#prefLabel")));
}

TEST(ParseSparql, StarProjectsVariablesInOrderOfAppearance) {
  Query q = parse_sparql(
      "PREFIX ex: <http://example.org/> SELECT * { ?b ex:p ?a . ?a a ?c } LIMIT 5 OFFSET 2");
  EXPECT_TRUE(q.select_all);
  EXPECT_EQ(q.variables, (std::vector<std::string>{"b", "a", "c"}));
  EXPECT_EQ(q.patterns[1].predicate,
            PatternSlot::constant(Term::iri("http://www.w3.org/1999/02/22-rdf-syntax-ns#type")));
  EXPECT_EQ(q.limit, 5u);
  EXPECT_EQ(q.offset, 2u);
}

TEST(ParseSparql, LiteralEscapesAndDollarVariables) {
  Query q = parse_sparql(R"(SELECT $s WHERE { $s <http://x/p> "a\"b\\c\nd" })");
  EXPECT_EQ(q.variables, std::vector<std::string>{"s"});
  EXPECT_EQ(q.patterns[0].object, PatternSlot::constant(Term::literal("a\"b\\c\nd")));
  EXPECT_EQ(sparql_escape_literal("a\"b\\c\nd"), R"(a\"b\\c\nd)");
}

void expect_syntax_error(const std::string& text) {
  try {
    parse_sparql(text);
    FAIL() << "expected ParseError: " << text;
  } catch (const UnsupportedFeatureError& e) {
    FAIL() << "expected a plain syntax error, got: " << e.what();
  } catch (const ParseError& e) {
    EXPECT_LE(e.position(), text.size()) << e.what();
  }
}

TEST(ParseSparql, SyntaxErrorsCarryOffsets) {
  expect_syntax_error("SELECT ?s {");
  expect_syntax_error("SELECT ?s WHERE { ?s <http://x/p> }");
  expect_syntax_error("SELECT WHERE { ?s <http://x/p> ?o }");
  expect_syntax_error("SELECT ?s WHERE { ?s <http://x/p> ?o } trailing");
  expect_syntax_error("SELECT ?s WHERE { ?s <x> ?o }");
  expect_syntax_error("SELECT ?s WHERE { ?s <http://x/p> \"open }");
  expect_syntax_error("SELECT ?q WHERE { ?s <http://x/p> ?o }");
  expect_syntax_error("");
  try {
    parse_sparql("SELECT ?s {");
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 11u);
    EXPECT_NE(std::string(e.what()).find("offset 11"), std::string::npos) << e.what();
  }
}

TEST(ParseSparql, UnknownPrefix) {
  try {
    parse_sparql("SELECT ?s WHERE { ?s foo:bar ?o }");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("foo"), std::string::npos) << e.what();
    EXPECT_EQ(e.position(), 21u);
  }
}

TEST(ParseSparql, UnsupportedFeaturesAreNamed) {
  for (const std::string text :
       {"SELECT ?s WHERE { ?s <http://x/p> ?o OPTIONAL { ?s <http://x/q> ?z } }",
        "SELECT ?s WHERE { ?s <http://x/p> ?o FILTER(?o) }",
        "SELECT ?s WHERE { { ?s <http://x/p> ?o } UNION { ?s <http://x/q> ?o } }",
        "SELECT ?s WHERE { ?s <http://x/p> ?o } ORDER BY ?s",
        "SELECT ?s WHERE { ?s <http://x/p> ?o ; <http://x/q> ?z }",
        "SELECT ?s WHERE { ?s <http://x/p> ?o , ?z }",
        "SELECT ?s WHERE { ?s <http://x/p> \"x\"@en }",
        "SELECT ?s WHERE { ?s <http://x/p> 42 }",
        "ASK { ?s <http://x/p> ?o }"}) {
    try {
      parse_sparql(text);
      FAIL() << "accepted: " << text;
    } catch (const UnsupportedFeatureError& e) {
      EXPECT_NE(std::string(e.what()).find("unsupported"), std::string::npos) << e.what();
    }
  }
}

TEST(Evaluate, SinglePattern) {
  Dataset d({t("a", "p", ex("b"))});
  ResultSet r = run("PREFIX : <http://example.org/> SELECT ?s WHERE { ?s :p :b }", d);
  EXPECT_EQ(r.variables, std::vector<std::string>{"s"});
  EXPECT_EQ(r.rows, (std::vector<std::vector<Term>>{{ex("a")}}));
}

Dataset six_triples() {
  return Dataset({t("alice", "knows", ex("bob")), t("alice", "knows", ex("carol")),
                  t("bob", "knows", ex("carol")), t("bob", "name", Term::literal("Bob")),
                  t("carol", "name", Term::literal("Carol")),
                  t("dave", "name", Term::literal("Dave"))});
}

TEST(Evaluate, TwoPatternJoinMatchesHandComputedRows) {
  Dataset d = six_triples();
  const std::string text =
      "PREFIX : <http://example.org/> SELECT ?x ?n WHERE { ?x :knows ?y . ?y :name ?n }";
  // alice-bob-"Bob", alice-carol-"Carol", bob-carol-"Carol".
  std::vector<std::vector<Term>> expected = {{ex("alice"), Term::literal("Bob")},
                                             {ex("alice"), Term::literal("Carol")},
                                             {ex("bob"), Term::literal("Carol")}};
  EXPECT_EQ(run(text, d).rows, expected);

  Query q = parse_sparql(text);
  testing::OracleQuery oracle{q.patterns, q.variables, false, {}, {}, text};
  EXPECT_EQ(testing::brute_force_evaluate(oracle, d.triples()).rows, expected);
}

TEST(Evaluate, DistinctCollapsesDuplicates) {
  Dataset d = six_triples();
  const std::string body = " ?n WHERE { ?x <http://example.org/knows> ?y . "
                           "?y <http://example.org/name> ?n }";
  EXPECT_EQ(run("SELECT" + body, d).rows.size(), 3u);
  EXPECT_EQ(run("SELECT DISTINCT" + body, d).rows,
            (std::vector<std::vector<Term>>{{Term::literal("Bob")}, {Term::literal("Carol")}}));
}

TEST(Evaluate, LimitOffsetAndRepeatedVariables) {
  Dataset d({t("a", "p", ex("a")), t("a", "p", ex("b")), t("b", "p", ex("b")),
             t("c", "p", ex("a"))});
  EXPECT_EQ(run("SELECT ?s { ?s <http://example.org/p> ?s }", d).rows,
            (std::vector<std::vector<Term>>{{ex("a")}, {ex("b")}}));
  auto all = run("SELECT ?s ?o { ?s <http://example.org/p> ?o }", d).rows;
  ASSERT_EQ(all.size(), 4u);
  auto page = run("SELECT ?s ?o { ?s <http://example.org/p> ?o } LIMIT 2 OFFSET 1", d).rows;
  EXPECT_EQ(page, (std::vector<std::vector<Term>>{all[1], all[2]}));
  EXPECT_TRUE(run("SELECT ?s { ?s <http://example.org/p> ?o } OFFSET 9", d).rows.empty());
  EXPECT_TRUE(run("SELECT ?s { ?s <http://example.org/p> ?o } LIMIT 0", d).rows.empty());
}

TEST(Evaluate, UnknownConstantGivesNoRows) {
  Dataset d = six_triples();
  EXPECT_TRUE(run("SELECT ?s { ?s <http://example.org/nope> ?o }", d).rows.empty());
  EXPECT_TRUE(run("SELECT ?s { ?s ?p ?o }", Dataset{}).rows.empty());
}

// Every index, and every written pattern order, yields the same rows.
TEST(EvaluateProperties, IndexesAndPatternOrdersAgree) {
  std::mt19937 rng(31);
  for (int round = 0; round < 150; ++round) {
    auto triples = testing::random_triples(rng, 80);
    Dataset d(triples);
    auto oq = testing::random_query(rng, triples);
    Query q = parse_sparql(oq.text);
    ResultSet reference = evaluate(q, d);
    for (auto which : {TripleIndex::kSubject, TripleIndex::kPredicateObject,
                       TripleIndex::kObject}) {
      EvalOptions forced;
      forced.force_index = which;
      ASSERT_EQ(evaluate(q, d, forced), reference) << oq.text;
    }
    std::vector<std::size_t> order(q.patterns.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    do {
      Query permuted = q;
      for (std::size_t i = 0; i < order.size(); ++i) permuted.patterns[i] = q.patterns[order[i]];
      EvalOptions written;
      written.reorder_patterns = false;
      ASSERT_EQ(evaluate(permuted, d, written), reference) << oq.text;
    } while (std::next_permutation(order.begin(), order.end()));
  }
}

TEST(EvaluateProperties, AgreesWithBruteForce) {
  std::mt19937 rng(32);
  for (int round = 0; round < 150; ++round) {
    auto triples = testing::random_triples(rng, 60);
    auto oq = testing::random_query(rng, triples);
    Query q = parse_sparql(oq.text);
    ASSERT_EQ(q.patterns, oq.patterns) << oq.text;
    ASSERT_EQ(q.variables, oq.projection) << oq.text;
    ASSERT_EQ(evaluate(q, Dataset(triples)), testing::brute_force_evaluate(oq, triples))
        << oq.text;
  }
}

}  // namespace
}  // namespace epl
