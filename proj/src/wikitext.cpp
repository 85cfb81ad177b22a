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
#include <cctype>
#include <string>
#include <string_view>

#include "epl/textproc.hpp"

namespace epl {
namespace {

char lower(char c) {
  return static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
}

bool istarts_with(std::string_view s, std::size_t at, std::string_view prefix) {
  if (at + prefix.size() > s.size()) return false;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (lower(s[at + i]) != prefix[i]) return false;
  }
  return true;
}

std::size_t ifind(std::string_view s, std::string_view needle, std::size_t from) {
  for (std::size_t i = from; i + needle.size() <= s.size(); ++i) {
    if (istarts_with(s, i, needle)) return i;
  }
  return std::string_view::npos;
}

std::size_t end_of_line(std::string_view s, std::size_t from) {
  std::size_t nl = s.find('\n', from);
  return nl == std::string_view::npos ? s.size() : nl;
}

std::string remove_comments(std::string_view s) {
  std::string out;
  std::size_t i = 0;
  while (i < s.size()) {
    std::size_t open = s.find("<!--", i);
    if (open == std::string_view::npos) break;
    out.append(s.substr(i, open - i));
    std::size_t close = s.find("-->", open + 4);
    i = close == std::string_view::npos ? s.size() : close + 3;
  }
  if (i < s.size()) out.append(s.substr(i));
  return out;
}

// <ref>..</ref>, <ref name=x/>; an unclosed <ref> is removed to end of line.
std::string remove_refs(std::string_view s) {
  std::string out;
  std::size_t i = 0;
  while (i < s.size()) {
    std::size_t open = ifind(s, "<ref", i);
    if (open == std::string_view::npos) break;
    char after = open + 4 < s.size() ? s[open + 4] : '\0';
    if (after != '>' && after != ' ' && after != '/' && after != '\t') {
      out.append(s.substr(i, open + 4 - i));
      i = open + 4;
      continue;
    }
    out.append(s.substr(i, open - i));
    std::size_t gt = s.find('>', open);
    if (gt == std::string_view::npos) {
      i = end_of_line(s, open);
      continue;
    }
    if (s[gt - 1] == '/') {
      i = gt + 1;
      continue;
    }
    std::size_t close = ifind(s, "</ref", gt);
    if (close == std::string_view::npos) {
      i = end_of_line(s, open);
      continue;
    }
    std::size_t close_gt = s.find('>', close);
    i = close_gt == std::string_view::npos ? s.size() : close_gt + 1;
  }
  if (i < s.size()) out.append(s.substr(i));
  return out;
}

// Finds the index just past the "}}" or "]]" that closes the construct
// opened at 'open'; npos if unbalanced.
std::size_t find_balanced(std::string_view s, std::size_t open, char o, char c) {
  int depth = 0;
  for (std::size_t i = open; i + 1 < s.size(); ++i) {
    if (s[i] == o && s[i + 1] == o) {
      ++depth;
      ++i;
    } else if (s[i] == c && s[i + 1] == c) {
      --depth;
      ++i;
      if (depth == 0) return i + 1;
    }
  }
  return std::string_view::npos;
}

std::string remove_templates(std::string_view s) {
  std::string out;
  std::size_t i = 0;
  while (i < s.size()) {
    std::size_t open = s.find("{{", i);
    if (open == std::string_view::npos) break;
    out.append(s.substr(i, open - i));
    std::size_t close = find_balanced(s, open, '{', '}');
    i = close == std::string_view::npos ? end_of_line(s, open) : close;
  }
  if (i < s.size()) out.append(s.substr(i));
  // A stray closer has no template to belong to.
  for (std::size_t p = out.find("}}"); p != std::string::npos; p = out.find("}}", p)) {
    out.erase(p, 2);
  }
  return out;
}

bool is_hidden_namespace(std::string_view target) {
  std::size_t colon = target.find(':');
  if (colon == std::string_view::npos) return false;
  std::string ns;
  for (char c : target.substr(0, colon)) {
    if (c != ' ') ns += lower(c);
  }
  if (ns == "file" || ns == "image" || ns == "category" || ns == "media") {
    return true;
  }
  // Interlanguage links such as [[fr:Apprentissage]].
  if (ns.size() >= 2 && ns.size() <= 3) {
    for (char c : ns) {
      if (c < 'a' || c > 'z') return false;
    }
    return true;
  }
  return false;
}

std::string reduce_links(std::string_view s);

std::string link_surface(std::string_view inner) {
  // Split on '|' at nesting depth zero.
  int depth = 0;
  std::size_t first_pipe = std::string_view::npos;
  std::size_t last_pipe = std::string_view::npos;
  for (std::size_t i = 0; i < inner.size(); ++i) {
    if (inner.substr(i, 2) == "[[") {
      ++depth;
      ++i;
    } else if (inner.substr(i, 2) == "]]") {
      --depth;
      ++i;
    } else if (inner[i] == '|' && depth == 0) {
      if (first_pipe == std::string_view::npos) first_pipe = i;
      last_pipe = i;
    }
  }
  std::string_view target = inner.substr(0, first_pipe);
  if (is_hidden_namespace(target)) return {};
  if (first_pipe == std::string_view::npos) {
    std::string surface(target);
    if (!surface.empty() && surface.front() == ':') surface.erase(0, 1);
    return surface;
  }
  return reduce_links(inner.substr(last_pipe + 1));
}

std::string reduce_links(std::string_view s) {
  std::string out;
  std::size_t i = 0;
  while (i < s.size()) {
    std::size_t open = s.find("[[", i);
    if (open == std::string_view::npos) break;
    std::size_t close = find_balanced(s, open, '[', ']');
    if (close == std::string_view::npos) break;
    out.append(s.substr(i, open - i));
    out += link_surface(s.substr(open + 2, close - open - 4));
    i = close;
  }
  if (i < s.size()) out.append(s.substr(i));
  return out;
}

// [http://x label] -> label, [http://x] -> "".
std::string reduce_external_links(std::string_view s) {
  std::string out;
  std::size_t i = 0;
  while (i < s.size()) {
    std::size_t open = s.find('[', i);
    if (open == std::string_view::npos) break;
    bool url = istarts_with(s, open + 1, "http://") ||
               istarts_with(s, open + 1, "https://") ||
               istarts_with(s, open + 1, "ftp://") ||
               istarts_with(s, open + 1, "//");
    std::size_t close = s.find(']', open);
    std::size_t nl = end_of_line(s, open);
    if (!url || close == std::string_view::npos || close > nl) {
      out.append(s.substr(i, open + 1 - i));
      i = open + 1;
      continue;
    }
    out.append(s.substr(i, open - i));
    std::string_view inner = s.substr(open + 1, close - open - 1);
    std::size_t space = inner.find(' ');
    if (space != std::string_view::npos) out.append(inner.substr(space + 1));
    i = close + 1;
  }
  if (i < s.size()) out.append(s.substr(i));
  return out;
}

std::string remove_emphasis(std::string_view s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '\'' && i + 1 < s.size() && s[i + 1] == '\'') {
      while (i + 1 < s.size() && s[i + 1] == '\'') ++i;
      continue;
    }
    out += s[i];
  }
  return out;
}

// Drops remaining HTML-like tags (<br/>, <small>, </sup>) and behaviour
// switches such as __TOC__.
std::string remove_tags(std::string_view s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '<' && i + 1 < s.size() &&
        (std::isalpha(static_cast<unsigned char>(s[i + 1])) || s[i + 1] == '/')) {
      std::size_t gt = s.find('>', i);
      std::size_t nl = end_of_line(s, i);
      if (gt != std::string_view::npos && gt < nl) {
        i = gt;
        continue;
      }
    }
    if (s.substr(i, 2) == "__") {
      std::size_t j = i + 2;
      while (j < s.size() && std::isupper(static_cast<unsigned char>(s[j]))) ++j;
      if (j > i + 2 && s.substr(j, 2) == "__") {
        i = j + 1;
        continue;
      }
    }
    out += s[i];
  }
  return out;
}

std::string_view trim_view(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r')) ++b;
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r')) --e;
  return s.substr(b, e - b);
}

// Headings become paragraphs of their own; list markers and rules go away.
std::string reduce_lines(std::string_view s) {
  std::string out;
  std::size_t i = 0;
  while (i <= s.size()) {
    std::size_t nl = end_of_line(s, i);
    std::string_view line = s.substr(i, nl - i);
    std::string_view t = trim_view(line);
    if (t.size() >= 2 && t.front() == '=' && t.back() == '=') {
      std::size_t b = 0, e = t.size();
      while (b < e && t[b] == '=') ++b;
      while (e > b && t[e - 1] == '=') --e;
      std::string_view heading = trim_view(t.substr(b, e - b));
      if (!out.empty() && out.back() != '\n') out += '\n';
      out += '\n';
      out.append(heading);
      out += '\n';
    } else if (t.starts_with("----")) {
      // horizontal rule
    } else {
      std::size_t b = 0;
      auto is_marker = [](char c) {
        return c == '*' || c == '#' || c == ':' || c == ';';
      };
      if (!line.empty() && is_marker(line[0])) {
        while (b < line.size() && (is_marker(line[b]) || line[b] == ' ' ||
                                   line[b] == '\t')) {
          ++b;
        }
      }
      out.append(b > 0 ? trim_view(line.substr(b)) : line);
    }
    if (nl >= s.size()) break;
    out += '\n';
    i = nl + 1;
  }
  return out;
}

constexpr int kMaxRounds = 16;

std::string strip_pass(std::string_view wikitext) {
  std::string s = remove_comments(wikitext);
  s = remove_refs(s);
  s = remove_templates(s);
  s = reduce_links(s);
  s = reduce_external_links(s);
  s = remove_emphasis(s);
  s = remove_tags(s);
  s = reduce_lines(s);
  return decode_entities(s);
}

}  // namespace

// Entity decoding and tag removal can expose new markup, so passes repeat
// until the text is a fixed point.
std::string strip_wikitext(std::string_view wikitext) {
  std::string text = strip_pass(wikitext);
  for (int round = 0; round < kMaxRounds; ++round) {
    std::string next = strip_pass(text);
    if (next == text) break;
    text = std::move(next);
  }
  return text;
}

}  // namespace epl
