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
#include <cstdio>
#include <string>
#include <string_view>
#include <vector>

#include "epl/error.hpp"
#include "epl/iri.hpp"
#include "epl/rdf.hpp"

namespace epl {
namespace {

void append_utf8(std::string& out, std::uint32_t cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

std::string escape_literal(std::string_view value) {
  std::string out;
  out.reserve(value.size() + 2);
  for (char ch : value) {
    auto c = static_cast<unsigned char>(ch);
    switch (ch) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\r':
        out += "\\r";
        break;
      case '\t':
        out += "\\t";
        break;
      default:
        if (c < 0x20 || c == 0x7F) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04X", c);
          out += buf;
        } else {
          out += ch;
        }
    }
  }
  return out;
}

class LineParser {
 public:
  LineParser(std::string_view line, std::size_t line_no)
      : line_(line), line_no_(line_no) {}

  // False for blank and comment lines.
  bool parse(Triple& triple) {
    skip_space();
    if (at_end() || peek() == '#') return false;
    triple.subject = term("subject");
    skip_space();
    triple.predicate = term("predicate");
    skip_space();
    triple.object = term("object");
    skip_space();
    if (at_end() || peek() != '.') fail("expected '.' after object");
    ++pos_;
    skip_space();
    if (!at_end() && peek() != '#') fail("unexpected text after '.'");
    if (!triple.subject.is_iri()) fail("subject must be an IRI");
    if (!triple.predicate.is_iri()) fail("predicate must be an IRI");
    return true;
  }

 private:
  bool at_end() const { return pos_ >= line_.size(); }
  char peek() const { return line_[pos_]; }

  void skip_space() {
    while (!at_end() && (peek() == ' ' || peek() == '\t' || peek() == '\r')) {
      ++pos_;
    }
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("line " + std::to_string(line_no_) + ", column " +
                         std::to_string(pos_ + 1) + ": " + what,
                     line_no_);
  }

  std::uint32_t hex_escape(std::size_t digits) {
    if (pos_ + digits > line_.size()) fail("truncated \\u escape");
    std::uint32_t cp = 0;
    for (std::size_t i = 0; i < digits; ++i) {
      char c = line_[pos_++];
      cp <<= 4;
      if (c >= '0' && c <= '9') {
        cp |= static_cast<std::uint32_t>(c - '0');
      } else if (c >= 'a' && c <= 'f') {
        cp |= static_cast<std::uint32_t>(c - 'a' + 10);
      } else if (c >= 'A' && c <= 'F') {
        cp |= static_cast<std::uint32_t>(c - 'A' + 10);
      } else {
        fail("bad hex digit in escape");
      }
    }
    if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
      fail("escape is not a Unicode scalar value");
    }
    return cp;
  }

  Term term(const char* role) {
    if (at_end()) fail(std::string("missing ") + role);
    char c = peek();
    if (c == '<') return iri();
    if (c == '"') return literal();
    if (c == '_') fail("blank nodes are not supported");
    fail(std::string("invalid ") + role);
  }

  Term iri() {
    ++pos_;
    std::string value;
    while (true) {
      if (at_end()) fail("unterminated IRI");
      char c = line_[pos_++];
      if (c == '>') break;
      if (c == '\\') {
        if (at_end()) fail("truncated escape in IRI");
        char e = line_[pos_++];
        if (e == 'u') {
          append_utf8(value, hex_escape(4));
        } else if (e == 'U') {
          append_utf8(value, hex_escape(8));
        } else {
          fail("invalid escape in IRI");
        }
        continue;
      }
      value += c;
    }
    if (!is_absolute_iri(value)) fail("not an absolute IRI: <" + value + ">");
    return Term::iri(std::move(value));
  }

  Term literal() {
    ++pos_;
    std::string value;
    while (true) {
      if (at_end()) fail("unterminated literal");
      char c = line_[pos_++];
      if (c == '"') break;
      if (c != '\\') {
        value += c;
        continue;
      }
      if (at_end()) fail("truncated escape in literal");
      char e = line_[pos_++];
      switch (e) {
        case 't': value += '\t'; break;
        case 'b': value += '\b'; break;
        case 'n': value += '\n'; break;
        case 'r': value += '\r'; break;
        case 'f': value += '\f'; break;
        case '"': value += '"'; break;
        case '\'': value += '\''; break;
        case '\\': value += '\\'; break;
        case 'u': append_utf8(value, hex_escape(4)); break;
        case 'U': append_utf8(value, hex_escape(8)); break;
        default: fail(std::string("invalid escape \\") + e);
      }
    }
    if (!at_end() && peek() == '@') fail("language tags are not supported");
    if (!at_end() && peek() == '^') fail("datatyped literals are not supported");
    return Term::literal(std::move(value));
  }

  std::string_view line_;
  std::size_t line_no_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_ntriples(const Term& term) {
  if (term.is_iri()) return "<" + term.value + ">";
  return "\"" + escape_literal(term.value) + "\"";
}

std::string serialize_ntriples(const Dataset& dataset) {
  std::vector<std::string> lines;
  lines.reserve(dataset.size());
  for (const auto& t : dataset.triples()) {
    lines.push_back(to_ntriples(t.subject) + " " + to_ntriples(t.predicate) +
                    " " + to_ntriples(t.object) + " .\n");
  }
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const auto& line : lines) out += line;
  return out;
}

Dataset parse_ntriples(std::string_view text) {
  std::vector<Triple> triples;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    ++line_no;
    Triple t;
    if (LineParser(text.substr(start, nl - start), line_no).parse(t)) {
      triples.push_back(std::move(t));
    }
    start = nl + 1;
  }
  return Dataset(std::move(triples));
}

}  // namespace epl
