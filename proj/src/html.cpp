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
#include <string>
#include <string_view>
#include <utility>

#include "epl/textproc.hpp"

namespace epl {
namespace {

char lower(char c) {
  return static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
}

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f';
}

bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)); }

// Case-insensitive search for an ASCII needle.
std::size_t ifind(std::string_view hay, std::string_view needle,
                  std::size_t from) {
  if (needle.size() > hay.size()) return std::string_view::npos;
  for (std::size_t i = from; i + needle.size() <= hay.size(); ++i) {
    bool match = true;
    for (std::size_t j = 0; j < needle.size() && match; ++j) {
      match = lower(hay[i + j]) == needle[j];
    }
    if (match) return i;
  }
  return std::string_view::npos;
}

void append_utf8(std::string& out, unsigned long cp) {
  if (cp == 0 || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) cp = 0xFFFD;
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

constexpr std::array<std::pair<std::string_view, unsigned>, 40> kEntities{{
    {"amp", '&'},     {"lt", '<'},        {"gt", '>'},
    {"quot", '"'},    {"apos", '\''},     {"nbsp", 0xA0},
    {"ndash", 0x2013}, {"mdash", 0x2014}, {"lsquo", 0x2018},
    {"rsquo", 0x2019}, {"ldquo", 0x201C}, {"rdquo", 0x201D},
    {"hellip", 0x2026}, {"copy", 0xA9},   {"reg", 0xAE},
    {"trade", 0x2122}, {"laquo", 0xAB},   {"raquo", 0xBB},
    {"middot", 0xB7}, {"bull", 0x2022},   {"eacute", 0xE9},
    {"egrave", 0xE8}, {"ecirc", 0xEA},    {"euml", 0xEB},
    {"agrave", 0xE0}, {"acirc", 0xE2},    {"ccedil", 0xE7},
    {"icirc", 0xEE},  {"iuml", 0xEF},     {"ocirc", 0xF4},
    {"ouml", 0xF6},   {"uuml", 0xFC},     {"ugrave", 0xF9},
    {"auml", 0xE4},   {"szlig", 0xDF},    {"Eacute", 0xC9},
    {"times", 0xD7},  {"shy", 0xAD},      {"thinsp", 0x2009},
    {"ensp", 0x2002},
}};

constexpr std::array<std::string_view, 14> kVoidElements{
    "area", "base", "br",   "col",   "embed",  "hr",    "img",
    "input", "link", "meta", "param", "source", "track", "wbr"};

constexpr std::array<std::string_view, 5> kRawTextElements{
    "script", "style", "noscript", "template", "title"};

constexpr std::array<std::string_view, 6> kFurnitureElements{
    "nav", "header", "footer", "aside", "head", "menu"};

constexpr std::array<std::string_view, 13> kFurnitureNames{
    "menu",    "nav",     "navbar",  "navigation", "breadcrumb",
    "breadcrumbs", "sidebar", "header", "footer", "banner",
    "toolbar", "topbar",  "skiplinks"};

constexpr std::array<std::string_view, 34> kBlockElements{
    "address", "article", "blockquote", "body", "caption", "dd",
    "div",     "dl",      "dt",         "fieldset", "figcaption", "figure",
    "form",    "h1",      "h2",         "h3", "h4", "h5",
    "h6",      "hr",      "html",       "li", "main", "ol",
    "p",       "pre",     "section",    "table", "tbody", "td",
    "th",      "thead",   "tr",         "ul"};

template <std::size_t N>
bool contains(const std::array<std::string_view, N>& set, std::string_view s) {
  return std::find(set.begin(), set.end(), s) != set.end();
}

struct Tag {
  std::string name;  // lowercase
  bool closing = false;
  bool self_closing = false;
  std::string id;
  std::string cls;
  std::size_t end = 0;  // index past '>'
};

// Parses the tag starting at html[pos] == '<'. Returns false when no
// terminating '>' exists.
bool parse_tag(std::string_view html, std::size_t pos, Tag& tag) {
  std::size_t i = pos + 1;
  if (i < html.size() && html[i] == '/') {
    tag.closing = true;
    ++i;
  }
  while (i < html.size() &&
         (std::isalnum(static_cast<unsigned char>(html[i])) ||
          html[i] == '-' || html[i] == ':')) {
    tag.name += lower(html[i++]);
  }
  while (i < html.size() && html[i] != '>') {
    if (html[i] == '/' && i + 1 < html.size() && html[i + 1] == '>') {
      tag.self_closing = true;
      ++i;
      continue;
    }
    if (is_space(html[i]) || html[i] == '/') {
      ++i;
      continue;
    }
    std::string attr;
    while (i < html.size() && !is_space(html[i]) && html[i] != '=' &&
           html[i] != '>' && html[i] != '/') {
      attr += lower(html[i++]);
    }
    while (i < html.size() && is_space(html[i])) ++i;
    std::string value;
    if (i < html.size() && html[i] == '=') {
      ++i;
      while (i < html.size() && is_space(html[i])) ++i;
      if (i < html.size() && (html[i] == '"' || html[i] == '\'')) {
        char q = html[i++];
        std::size_t close = html.find(q, i);
        if (close == std::string_view::npos) return false;
        value.assign(html.substr(i, close - i));
        i = close + 1;
      } else {
        while (i < html.size() && !is_space(html[i]) && html[i] != '>') {
          value += html[i++];
        }
      }
    }
    if (attr.empty() && value.empty()) {
      ++i;  // stray character
      continue;
    }
    if (attr == "id") tag.id = value;
    if (attr == "class") tag.cls = value;
  }
  if (i >= html.size()) return false;
  tag.end = i + 1;
  return true;
}

bool names_furniture(std::string_view attr) {
  std::string word;
  auto check = [&] {
    bool hit = contains(kFurnitureNames, word);
    word.clear();
    return hit;
  };
  for (char c : attr) {
    if (std::isalnum(static_cast<unsigned char>(c))) {
      word += lower(c);
    } else if (check()) {
      return true;
    }
  }
  return check();
}

bool is_tag_start(std::string_view html, std::size_t i) {
  if (html[i] != '<' || i + 1 >= html.size()) return false;
  char n = html[i + 1];
  return is_alpha(n) || n == '/' || n == '!' || n == '?';
}

// Accumulates visible text with HTML whitespace collapsing.
class TextSink {
 public:
  void text(std::string_view s) {
    for (char c : s) {
      if (is_space(c)) {
        pending_space_ = true;
        continue;
      }
      if (!out_.empty()) {
        if (pending_break_ > 0) {
          out_.append(static_cast<std::size_t>(pending_break_), '\n');
        } else if (pending_space_) {
          out_ += ' ';
        }
      }
      pending_break_ = 0;
      pending_space_ = false;
      out_ += c;
    }
  }
  void line_break() { pending_break_ = std::max(pending_break_, 1); }
  void block_break() { pending_break_ = 2; }
  std::string take() { return std::move(out_); }

 private:
  std::string out_;
  int pending_break_ = 0;
  bool pending_space_ = false;
};

}  // namespace

std::string decode_entities(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '&') {
      out += text[i];
      continue;
    }
    std::size_t semi = text.find(';', i + 1);
    if (semi == std::string_view::npos || semi - i > 12) {
      out += '&';
      continue;
    }
    std::string_view ref = text.substr(i + 1, semi - i - 1);
    bool decoded = false;
    if (ref.size() > 1 && ref[0] == '#') {
      bool hex = ref[1] == 'x' || ref[1] == 'X';
      std::string_view digits = ref.substr(hex ? 2 : 1);
      unsigned long cp = 0;
      bool ok = !digits.empty();
      for (char c : digits) {
        int v;
        if (c >= '0' && c <= '9') {
          v = c - '0';
        } else if (hex && std::isxdigit(static_cast<unsigned char>(c))) {
          v = 10 + lower(c) - 'a';
        } else {
          ok = false;
          break;
        }
        cp = cp * (hex ? 16 : 10) + static_cast<unsigned long>(v);
        if (cp > 0x10FFFF) cp = 0x110000;
      }
      if (ok) {
        append_utf8(out, cp);
        decoded = true;
      }
    } else {
      for (const auto& [name, cp] : kEntities) {
        if (name == ref) {
          append_utf8(out, cp);
          decoded = true;
          break;
        }
      }
    }
    if (decoded) {
      i = semi;
    } else {
      out += '&';
    }
  }
  return out;
}

namespace {

bool has_tags(std::string_view html) {
  for (std::size_t i = 0; i < html.size(); ++i) {
    if (is_tag_start(html, i)) return true;
  }
  return false;
}

std::string strip_pass(std::string_view html) {
  TextSink sink;
  std::string drop_name;  // furniture element currently being skipped
  int drop_depth = 0;
  std::size_t i = 0;
  while (i < html.size()) {
    if (!is_tag_start(html, i)) {
      std::size_t next = i + 1;
      while (next < html.size() && !is_tag_start(html, next)) ++next;
      if (drop_depth == 0) sink.text(decode_entities(html.substr(i, next - i)));
      i = next;
      continue;
    }
    if (html.substr(i, 4) == "<!--") {
      std::size_t close = html.find("-->", i + 4);
      i = close == std::string_view::npos ? html.size() : close + 3;
      continue;
    }
    if (html[i + 1] == '!' || html[i + 1] == '?') {
      std::size_t close = html.find('>', i);
      i = close == std::string_view::npos ? html.size() : close + 1;
      continue;
    }
    Tag tag;
    if (!parse_tag(html, i, tag)) {
      // Unterminated tag: nothing visible follows.
      break;
    }
    i = tag.end;
    bool is_void = tag.self_closing || contains(kVoidElements, tag.name);

    if (drop_depth > 0) {
      if (tag.name == drop_name && !is_void) {
        drop_depth += tag.closing ? -1 : 1;
        if (drop_depth == 0) sink.block_break();
      }
      continue;
    }
    if (!tag.closing && !is_void && contains(kRawTextElements, tag.name)) {
      std::string close_tag = "</" + tag.name;
      std::size_t close = ifind(html, close_tag, i);
      if (close == std::string_view::npos) break;
      std::size_t gt = html.find('>', close);
      i = gt == std::string_view::npos ? html.size() : gt + 1;
      continue;
    }
    if (!tag.closing && !is_void &&
        (contains(kFurnitureElements, tag.name) || names_furniture(tag.id) ||
         names_furniture(tag.cls))) {
      drop_name = tag.name;
      drop_depth = 1;
      sink.block_break();
      continue;
    }
    if (tag.name == "br") {
      sink.line_break();
    } else if (contains(kBlockElements, tag.name)) {
      sink.block_break();
    }
  }
  return sink.take();
}

}  // namespace

// Repeats until no tag remains, so the result is a fixed point; each pass
// strictly shortens its input.
std::string strip_boilerplate(std::string_view html) {
  std::string text(html);
  while (has_tags(text)) {
    std::string next = strip_pass(text);
    if (next == text) break;
    text = std::move(next);
  }
  return text;
}

std::string extract_html_title(std::string_view html) {
  std::size_t open = ifind(html, "<title", 0);
  if (open == std::string_view::npos) return {};
  std::size_t gt = html.find('>', open);
  if (gt == std::string_view::npos) return {};
  std::size_t close = ifind(html, "</title", gt + 1);
  if (close == std::string_view::npos) return {};
  std::string raw = decode_entities(html.substr(gt + 1, close - gt - 1));
  std::string out;
  bool space = false;
  for (char c : raw) {
    if (is_space(c)) {
      space = !out.empty();
      continue;
    }
    if (space) out += ' ';
    space = false;
    out += c;
  }
  return out;
}

}  // namespace epl
