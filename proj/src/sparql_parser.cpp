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
#include <array>
#include <cctype>
#include <set>

#include "epl/error.hpp"
#include "epl/iri.hpp"
#include "epl/sparql.hpp"

namespace epl {
namespace {

constexpr std::string_view kRdfType =
    "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";

constexpr std::array<std::string_view, 24> kUnsupportedKeywords{
    "OPTIONAL", "FILTER",  "UNION",    "MINUS",    "GRAPH",  "BIND",
    "VALUES",   "SERVICE", "ORDER",    "GROUP",    "HAVING", "REDUCED",
    "CONSTRUCT", "ASK",    "DESCRIBE", "BASE",     "FROM",   "NAMED",
    "INSERT",   "DELETE",  "LOAD",     "CLEAR",    "EXISTS", "NOT"};

enum class TokenKind {
  kIri,
  kPrefixedName,
  kVariable,
  kString,
  kNumber,
  kKeyword,
  kPunct,
  kEnd
};

struct Token {
  TokenKind kind = TokenKind::kEnd;
  std::string text;  // IRI without brackets, unescaped string, upper-cased
                     // keyword, variable name without '?', or punctuation
  std::size_t offset = 0;
};

std::string upper(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  return out;
}

bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' ||
         static_cast<unsigned char>(c) >= 0x80;
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> tokens;
    while (true) {
      skip_space_and_comments();
      if (pos_ >= text_.size()) {
        tokens.push_back({TokenKind::kEnd, "", pos_});
        return tokens;
      }
      tokens.push_back(next());
    }
  }

 private:
  [[noreturn]] void fail(const std::string& what, std::size_t at) const {
    throw ParseError("syntax error at offset " + std::to_string(at) + ": " +
                         what,
                     at);
  }

  void skip_space_and_comments() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        return;
      }
    }
  }

  Token next() {
    std::size_t start = pos_;
    char c = text_[pos_];
    if (c == '<') return iri(start);
    if (c == '"' || c == '\'') return string(start);
    if (c == '?' || c == '$') {
      ++pos_;
      std::size_t b = pos_;
      while (pos_ < text_.size() && is_name_char(text_[pos_]) &&
             text_[pos_] != '-') {
        ++pos_;
      }
      if (pos_ == b) fail("empty variable name", start);
      return {TokenKind::kVariable, std::string(text_.substr(b, pos_ - b)),
              start};
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
      }
      if (pos_ < text_.size() &&
          (text_[pos_] == '.' || text_[pos_] == 'e' || text_[pos_] == 'E') &&
          pos_ + 1 < text_.size() &&
          std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
        throw UnsupportedFeatureError(
            "unsupported feature at offset " + std::to_string(start) +
                ": non-integer numeric literals",
            start);
      }
      return {TokenKind::kNumber, std::string(text_.substr(start, pos_ - start)),
              start};
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == ':') {
      return name(start);
    }
    if (std::string_view("{}.*(),;=!&|+/^[]").find(c) != std::string_view::npos) {
      ++pos_;
      if (c == '^' && pos_ < text_.size() && text_[pos_] == '^') ++pos_;
      return {TokenKind::kPunct, std::string(text_.substr(start, pos_ - start)),
              start};
    }
    if (c == '@') fail("language tags are not supported", start);
    fail(std::string("unexpected character '") + c + "'", start);
  }

  Token iri(std::size_t start) {
    ++pos_;
    std::size_t b = pos_;
    while (pos_ < text_.size() && text_[pos_] != '>') {
      char ch = text_[pos_];
      if (ch == '<' || ch == '"' || ch == '{' || ch == '}' || ch == '|' ||
          ch == '^' || ch == '`' || ch == '\\' ||
          static_cast<unsigned char>(ch) <= 0x20) {
        fail("invalid character in IRI", pos_);
      }
      ++pos_;
    }
    if (pos_ >= text_.size()) fail("unterminated IRI", start);
    std::string value(text_.substr(b, pos_ - b));
    ++pos_;
    if (!is_absolute_iri(value)) {
      fail("IRI must be absolute: <" + value + ">", start);
    }
    return {TokenKind::kIri, std::move(value), start};
  }

  Token string(std::size_t start) {
    char quote = text_[pos_++];
    if (text_.substr(start, 3) == std::string(3, quote)) {
      throw UnsupportedFeatureError(
          "unsupported feature at offset " + std::to_string(start) +
              ": long string literals",
          start);
    }
    std::string value;
    while (true) {
      if (pos_ >= text_.size() || text_[pos_] == '\n') {
        fail("unterminated string literal", start);
      }
      char ch = text_[pos_++];
      if (ch == quote) break;
      if (ch != '\\') {
        value += ch;
        continue;
      }
      if (pos_ >= text_.size()) fail("truncated escape", start);
      char e = text_[pos_++];
      switch (e) {
        case 't': value += '\t'; break;
        case 'n': value += '\n'; break;
        case 'r': value += '\r'; break;
        case 'b': value += '\b'; break;
        case 'f': value += '\f'; break;
        case '"': value += '"'; break;
        case '\'': value += '\''; break;
        case '\\': value += '\\'; break;
        default: fail(std::string("invalid escape \\") + e, pos_ - 2);
      }
    }
    if (pos_ < text_.size() && text_[pos_] == '@') {
      throw UnsupportedFeatureError(
          "unsupported feature at offset " + std::to_string(pos_) +
              ": language-tagged literals",
          pos_);
    }
    if (text_.substr(pos_, 2) == "^^") {
      throw UnsupportedFeatureError(
          "unsupported feature at offset " + std::to_string(pos_) +
              ": datatyped literals",
          pos_);
    }
    return {TokenKind::kString, std::move(value), start};
  }

  // Keyword, 'a', or prefixed name (prefix may be empty).
  Token name(std::size_t start) {
    while (pos_ < text_.size() &&
           (is_name_char(text_[pos_]) || text_[pos_] == '.')) {
      ++pos_;
    }
    // A trailing '.' ends the triple rather than the name.
    while (pos_ > start && text_[pos_ - 1] == '.') --pos_;
    if (pos_ < text_.size() && text_[pos_] == ':') {
      ++pos_;
      while (pos_ < text_.size() &&
             (is_name_char(text_[pos_]) || text_[pos_] == '.' ||
              text_[pos_] == ':' || text_[pos_] == '%')) {
        ++pos_;
      }
      while (text_[pos_ - 1] == '.') --pos_;
      return {TokenKind::kPrefixedName,
              std::string(text_.substr(start, pos_ - start)), start};
    }
    std::string word(text_.substr(start, pos_ - start));
    if (word == "a") return {TokenKind::kKeyword, "a", start};
    return {TokenKind::kKeyword, upper(word), start};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Query run() {
    Query q;
    while (is_keyword("PREFIX")) {
      ++pos_;
      const Token& name = peek();
      if (name.kind != TokenKind::kPrefixedName || name.text.back() != ':') {
        fail("expected prefix name ending in ':'", name);
      }
      std::string prefix = name.text.substr(0, name.text.size() - 1);
      ++pos_;
      const Token& iri = peek();
      if (iri.kind != TokenKind::kIri) fail("expected IRI after prefix", iri);
      q.prefixes[prefix] = iri.text;
      ++pos_;
    }
    prefixes_ = &q.prefixes;

    expect_keyword("SELECT");
    if (is_keyword("DISTINCT")) {
      q.distinct = true;
      ++pos_;
    }
    if (is_punct("*")) {
      q.select_all = true;
      ++pos_;
    } else {
      while (peek().kind == TokenKind::kVariable) {
        q.variables.push_back(peek().text);
        ++pos_;
      }
      if (q.variables.empty()) fail("expected variables or '*'", peek());
    }
    if (is_keyword("WHERE")) ++pos_;
    expect_punct("{");
    while (!is_punct("}")) {
      q.patterns.push_back(pattern());
      if (is_punct(".")) {
        ++pos_;
        continue;
      }
      if (!is_punct("}")) {
        if (is_punct(";") || is_punct(",")) {
          unsupported("predicate-object and object lists", peek());
        }
        fail("expected '.' or '}'", peek());
      }
    }
    ++pos_;

    while (peek().kind == TokenKind::kKeyword) {
      const Token& kw = peek();
      std::optional<std::size_t>* slot = nullptr;
      if (kw.text == "LIMIT") slot = &q.limit;
      if (kw.text == "OFFSET") slot = &q.offset;
      if (slot == nullptr) break;
      if (slot->has_value()) fail("duplicate " + kw.text, kw);
      ++pos_;
      const Token& n = peek();
      if (n.kind != TokenKind::kNumber) fail("expected integer", n);
      try {
        *slot = static_cast<std::size_t>(std::stoull(n.text));
      } catch (const std::exception&) {
        fail("integer out of range", n);
      }
      ++pos_;
    }
    if (peek().kind != TokenKind::kEnd) {
      check_unsupported(peek());
      fail("unexpected '" + peek().text + "'", peek());
    }

    std::vector<std::string> seen;
    auto note = [&](const PatternSlot& s) {
      if (s.is_variable() &&
          std::find(seen.begin(), seen.end(), *s.variable) == seen.end()) {
        seen.push_back(*s.variable);
      }
    };
    for (const auto& p : q.patterns) {
      note(p.subject);
      note(p.predicate);
      note(p.object);
    }
    if (q.select_all) {
      q.variables = seen;
    } else {
      for (const auto& v : q.variables) {
        if (std::find(seen.begin(), seen.end(), v) == seen.end()) {
          throw ParseError("projected variable ?" + v +
                               " does not occur in the pattern",
                           tokens_.front().offset);
        }
      }
    }
    return q;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }

  bool is_keyword(std::string_view kw) const {
    return peek().kind == TokenKind::kKeyword && peek().text == kw;
  }
  bool is_punct(std::string_view p) const {
    return peek().kind == TokenKind::kPunct && peek().text == p;
  }

  [[noreturn]] void fail(const std::string& what, const Token& at) const {
    if (at.kind == TokenKind::kKeyword) check_unsupported(at);
    throw ParseError("syntax error at offset " + std::to_string(at.offset) + ": " + what,
                     at.offset);
  }

  [[noreturn]] static void unsupported(const std::string& what, const Token& at) {
    throw UnsupportedFeatureError("unsupported feature at offset " +
                                      std::to_string(at.offset) + ": " + what,
                                  at.offset);
  }

  static void check_unsupported(const Token& t) {
    if (t.kind != TokenKind::kKeyword) return;
    if (std::find(kUnsupportedKeywords.begin(), kUnsupportedKeywords.end(),
                  t.text) != kUnsupportedKeywords.end()) {
      unsupported(t.text, t);
    }
  }

  void expect_keyword(std::string_view kw) {
    if (!is_keyword(kw)) fail("expected " + std::string(kw), peek());
    ++pos_;
  }
  void expect_punct(std::string_view p) {
    if (!is_punct(p)) fail("expected '" + std::string(p) + "'", peek());
    ++pos_;
  }

  PatternSlot slot(bool allow_literal, bool allow_a) {
    const Token& t = peek();
    switch (t.kind) {
      case TokenKind::kVariable:
        ++pos_;
        return PatternSlot::var(t.text);
      case TokenKind::kIri:
        ++pos_;
        return PatternSlot::constant(Term::iri(t.text));
      case TokenKind::kPrefixedName: {
        ++pos_;
        auto colon = t.text.find(':');
        std::string prefix = t.text.substr(0, colon);
        auto it = prefixes_->find(prefix);
        if (it == prefixes_->end()) {
          throw ParseError("unknown prefix '" + prefix + ":' at offset " +
                               std::to_string(t.offset),
                           t.offset);
        }
        std::string iri = it->second + t.text.substr(colon + 1);
        if (!is_absolute_iri(iri)) fail("prefixed name expands to invalid IRI", t);
        return PatternSlot::constant(Term::iri(std::move(iri)));
      }
      case TokenKind::kString:
        if (!allow_literal) fail("literal not allowed here", t);
        ++pos_;
        return PatternSlot::constant(Term::literal(t.text));
      case TokenKind::kNumber:
        unsupported("numeric literals", t);
      case TokenKind::kKeyword:
        if (allow_a && t.text == "a") {
          ++pos_;
          return PatternSlot::constant(Term::iri(std::string(kRdfType)));
        }
        fail("unexpected keyword " + t.text, t);
      case TokenKind::kPunct:
        if (t.text == "[" || t.text == "(") {
          unsupported("blank nodes and collections", t);
        }
        if (t.text == "{") unsupported("nested group patterns", t);
        fail("unexpected '" + t.text + "'", t);
      case TokenKind::kEnd:
        fail("unexpected end of query", t);
    }
    fail("unexpected token", t);
  }

  TriplePattern pattern() {
    TriplePattern p;
    p.subject = slot(false, false);
    p.predicate = slot(false, true);
    p.object = slot(true, false);
    return p;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const std::map<std::string, std::string>* prefixes_ = nullptr;
};

}  // namespace

Query parse_sparql(std::string_view text) {
  return Parser(Lexer(text).run()).run();
}

std::string sparql_escape_literal(std::string_view value) {
  std::string out;
  for (char c : value) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      case '\b': out += "\\b"; break;
      case '\f': out += "\\f"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace epl
