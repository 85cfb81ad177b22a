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

#include <random>

#include "epl/error.hpp"
#include "epl/iri.hpp"
#include "epl/rdf.hpp"
#include "support/oracles.hpp"

namespace epl {
namespace {

Triple triple(const std::string& s, const std::string& p, Term o) {
  return {Term::iri(s), Term::iri(p), std::move(o)};
}

TEST(Ntriples, EmptyDatasetIsEmptyFile) {
  EXPECT_EQ(serialize_ntriples(Dataset{}), "");
  EXPECT_TRUE(parse_ntriples("").empty());
  EXPECT_TRUE(parse_ntriples("# only a comment\n\n   \n").empty());
}

TEST(Ntriples, QuoteIsEscapedOnItsLine) {
  Dataset d({triple("http://x/s", "http://x/p", Term::literal("say \"hi\""))});
  EXPECT_EQ(serialize_ntriples(d), "<http://x/s> <http://x/p> \"say \\\"hi\\\"\" .\n");
}

TEST(Ntriples, EscapesBackslashAndControls) {
  Dataset d({triple("http://x/s", "http://x/p", Term::literal("a\\b\nc\rd\te\x01" "f"))});
  EXPECT_EQ(serialize_ntriples(d),
            "<http://x/s> <http://x/p> \"a\\\\b\\nc\\rd\\te\\u0001f\" .\n");
  EXPECT_EQ(parse_ntriples(serialize_ntriples(d)), d);
}

TEST(Ntriples, ThreeTripleRoundTripIsSortedAndDeduplicated) {
  std::vector<Triple> triples = {
      triple("http://x/b", "http://x/p", Term::iri("http://x/c")),
      triple("http://x/a", "http://x/p", Term::literal("caf\xc3\xa9")),
      triple("http://x/a", "http://x/p", Term::literal("caf\xc3\xa9")),
      triple("http://x/a", "http://x/q", Term::literal(""))};
  Dataset d(triples);
  EXPECT_EQ(d.size(), 3u);
  std::string text = serialize_ntriples(d);
  EXPECT_EQ(text,
            "<http://x/a> <http://x/p> \"caf\xc3\xa9\" .\n"
            "<http://x/a> <http://x/q> \"\" .\n"
            "<http://x/b> <http://x/p> <http://x/c> .\n");
  Dataset back = parse_ntriples(text);
  EXPECT_EQ(back, d);
  EXPECT_EQ(serialize_ntriples(back), text);
}

TEST(Ntriples, ParsesUnicodeEscapesAndComments) {
  Dataset d = parse_ntriples(
      "# header\n"
      "<http://x/s>\t<http://x/p>   \"\\u00E9\\U0001F600\" . # trailing\n");
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d.triples()[0].object.value, "\xc3\xa9\xf0\x9f\x98\x80");
}

void expect_error_on_line(const std::string& text, std::size_t line) {
  try {
    parse_ntriples(text);
    FAIL() << "expected ParseError for: " << text;
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), line) << e.what();
    EXPECT_NE(std::string(e.what()).find("line " + std::to_string(line)),
              std::string::npos)
        << e.what();
  }
}

TEST(Ntriples, MalformedLinesReportLineNumber) {
  const std::string ok = "<http://x/s> <http://x/p> <http://x/o> .\n";
  expect_error_on_line(ok + "<http://x/s> <http://x/p> <http://x/o>\n", 2);
  expect_error_on_line(ok + ok + "<http://x/s> <http://x/p> \"open .\n", 3);
  expect_error_on_line("_:b <http://x/p> <http://x/o> .\n", 1);
  expect_error_on_line(ok + "<http://x/s> <http://x/p> \"x\"@en .\n", 2);
  expect_error_on_line(
      "<http://x/s> <http://x/p> \"1\"^^<http://www.w3.org/2001/XMLSchema#int> .\n", 1);
  expect_error_on_line("<rel> <http://x/p> <http://x/o> .\n", 1);
  expect_error_on_line("<http://x/s> \"lit\" <http://x/o> .\n", 1);
  expect_error_on_line("<http://x/s> <http://x/p> \"\\q\" .\n", 1);
  expect_error_on_line("<http://x/s> <http://x/p> <http://x/o> . extra\n", 1);
}

TEST(Dataset, RejectsInvalidTriples) {
  EXPECT_THROW(Dataset({{Term::literal("s"), Term::iri("http://x/p"), Term::iri("http://x/o")}}),
               ValidationError);
  EXPECT_THROW(Dataset({{Term::iri("http://x/s"), Term::iri("p"), Term::iri("http://x/o")}}),
               ValidationError);
  EXPECT_THROW(Dataset({{Term::iri("http://x/s"), Term::iri("http://x/p"), Term::iri("has space")}}),
               ValidationError);
}

// Each index, scanned with every combination of bound components, returns
// exactly the triples that match.
TEST(Dataset, IndexesAgreeOnMembership) {
  std::mt19937 rng(21);
  for (int round = 0; round < 30; ++round) {
    Dataset d(testing::random_triples(rng, 60));
    for (auto which : {TripleIndex::kSubject, TripleIndex::kPredicateObject,
                       TripleIndex::kObject}) {
      ASSERT_EQ(d.index(which).size(), d.size());
    }
    for (const auto& probe : d.id_triples()) {
      for (int mask = 0; mask < 8; ++mask) {
        std::optional<TermId> s, p, o;
        if (mask & 1) s = probe.s;
        if (mask & 2) p = probe.p;
        if (mask & 4) o = probe.o;
        auto matches = [&](const Dataset::IdTriple& t) {
          return (!s || t.s == *s) && (!p || t.p == *p) && (!o || t.o == *o);
        };
        std::size_t expected = 0;
        for (const auto& t : d.id_triples()) expected += matches(t);
        std::size_t exact = 0;
        for (auto pos : d.match(s, p, o)) exact += matches(d.id_triples()[pos]);
        ASSERT_EQ(exact, expected);
        ASSERT_EQ(d.match(s, p, o).size(), expected);
        for (auto which : {TripleIndex::kSubject, TripleIndex::kPredicateObject,
                           TripleIndex::kObject}) {
          std::size_t found = 0;
          for (auto pos : d.scan(which, s, p, o)) found += matches(d.id_triples()[pos]);
          ASSERT_EQ(found, expected);
        }
      }
    }
  }
}

TEST(Ntriples, PropertyRandomRoundTrip) {
  std::mt19937 rng(22);
  for (int round = 0; round < 200; ++round) {
    std::vector<Triple> triples = testing::random_triples(rng, 40);
    for (int k = 0; k < 5; ++k) {
      triples.push_back(triple("http://x/lit" + std::to_string(k), "http://x/p",
                               Term::literal(testing::random_literal(rng))));
    }
    Dataset d(triples);
    std::string text = serialize_ntriples(d);
    Dataset back = parse_ntriples(text);
    ASSERT_EQ(back, d) << text;
    ASSERT_EQ(serialize_ntriples(back), text);
  }
}

TEST(Iri, AbsoluteAndResolve) {
  EXPECT_TRUE(is_absolute_iri("http://example.org/a#b"));
  EXPECT_TRUE(is_absolute_iri("urn:epl:taxonomy"));
  EXPECT_FALSE(is_absolute_iri("relative/path"));
  EXPECT_FALSE(is_absolute_iri("http://x/a b"));
  EXPECT_FALSE(is_absolute_iri("1http://x"));
  EXPECT_EQ(resolve_iri("http://example.org/ccs2012", "#10010147"),
            "http://example.org/ccs2012#10010147");
  EXPECT_EQ(resolve_iri("http://example.org/a/b?q#f", "c"), "http://example.org/a/c");
  EXPECT_EQ(resolve_iri("http://example.org/a/b", "/c"), "http://example.org/c");
  EXPECT_EQ(resolve_iri("http://example.org/a/b", "//other/x"), "http://other/x");
  EXPECT_EQ(resolve_iri("http://example.org/a", "urn:x"), "urn:x");
  EXPECT_EQ(iri_escape("a b<c>\"{|}\\^`\x01"), "a%20b%3Cc%3E%22%7B%7C%7D%5C%5E%60%01");
}

}  // namespace
}  // namespace epl
