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
#include "epl/ingest.hpp"

#include <expat.h>
#include <spdlog/spdlog.h>
#include <zlib.h>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <memory>

#include "epl/error.hpp"
#include "epl/file_util.hpp"
#include "epl/iri.hpp"

namespace epl {
namespace {

namespace fs = std::filesystem;

std::string lowercase(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

bool is_redirect(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  constexpr std::string_view kRedirect = "#redirect";
  if (text.size() - i < kRedirect.size()) return false;
  return lowercase(std::string(text.substr(i, kRedirect.size()))) == kRedirect;
}

struct RawPage {
  std::string title;
  std::string ns;
  std::string text;
  bool redirect = false;  // <redirect/> element present
};

// Expat callbacks only collect finished pages; they are turned into
// Documents outside the parser.
class DumpHandler {
 public:
  void start(std::string_view name) {
    path_.emplace_back(local_name(name));
    if (path_.back() == "page") {
      page_ = RawPage{};
      in_page_ = true;
    }
    if (in_page_ && path_.size() >= 2 && path_.back() == "redirect" &&
        path_[path_.size() - 2] == "page") {
      page_.redirect = true;
    }
    capture_ = target();
    if (capture_ != nullptr) capture_->clear();
  }

  void end() {
    if (path_.back() == "page" && in_page_) {
      finished_.push_back(std::move(page_));
      in_page_ = false;
    }
    path_.pop_back();
    capture_ = nullptr;
  }

  void text(const char* s, int len) {
    if (capture_ != nullptr) capture_->append(s, static_cast<std::size_t>(len));
  }

  std::vector<RawPage> take() {
    std::vector<RawPage> out;
    out.swap(finished_);
    return out;
  }

  std::size_t pages_seen() const { return pages_done_ + finished_.size(); }
  void mark_done(std::size_t n) { pages_done_ += n; }

 private:
  static std::string_view local_name(std::string_view name) {
    auto colon = name.rfind(':');
    return colon == std::string_view::npos ? name : name.substr(colon + 1);
  }

  std::string* target() {
    if (!in_page_ || path_.size() < 2) return nullptr;
    const std::string& leaf = path_.back();
    const std::string& parent = path_[path_.size() - 2];
    if (parent == "page" && leaf == "title") return &page_.title;
    if (parent == "page" && leaf == "ns") return &page_.ns;
    // Full-history dumps carry several revisions; the last one wins.
    if (parent == "revision" && leaf == "text" && path_.size() >= 3 &&
        path_[path_.size() - 3] == "page") {
      return &page_.text;
    }
    return nullptr;
  }

  std::vector<std::string> path_;
  RawPage page_;
  bool in_page_ = false;
  std::string* capture_ = nullptr;
  std::vector<RawPage> finished_;
  std::size_t pages_done_ = 0;
};

// Pulls the next chunk of raw XML; returns 0 at end of input.
using ChunkReader = std::function<std::size_t(char* buffer, std::size_t size)>;

IngestStats parse_dump(const ChunkReader& read, const WikiDumpOptions& options,
                       const DocumentSink& sink) {
  XML_Parser parser = XML_ParserCreate(nullptr);
  if (parser == nullptr) throw Error("cannot allocate XML parser");
  std::unique_ptr<XML_ParserStruct, decltype(&XML_ParserFree)> guard(
      parser, &XML_ParserFree);
  DumpHandler handler;
  XML_SetUserData(parser, &handler);
  XML_SetElementHandler(
      parser,
      [](void* data, const XML_Char* name, const XML_Char**) {
        static_cast<DumpHandler*>(data)->start(name);
      },
      [](void* data, const XML_Char*) {
        static_cast<DumpHandler*>(data)->end();
      });
  XML_SetCharacterDataHandler(parser, [](void* data, const XML_Char* s, int len) {
    static_cast<DumpHandler*>(data)->text(s, len);
  });

  IngestStats stats;
  auto drain = [&] {
    std::vector<RawPage> pages = handler.take();
    handler.mark_done(pages.size());
    for (auto& page : pages) {
      ++stats.seen;
      std::string_view ns = page.ns;
      bool article = ns.empty() || ns == "0";
      if (!article || page.redirect || is_redirect(page.text) ||
          page.title.empty()) {
        ++stats.skipped;
        continue;
      }
      Document doc;
      doc.doc_id = "wp:" + page.title;
      doc.source = Source::kWikipedia;
      doc.url = wiki_url(options.url_base, page.title);
      doc.title = std::move(page.title);
      doc.clean = make_clean_text(strip_wikitext(page.text));
      ++stats.yielded;
      sink(std::move(doc));
    }
  };

  constexpr std::size_t kChunk = 1 << 16;
  std::vector<char> buffer(kChunk);
  while (true) {
    std::size_t n = read(buffer.data(), buffer.size());
    bool last = n == 0;
    if (XML_Parse(parser, buffer.data(), static_cast<int>(n),
                  last ? XML_TRUE : XML_FALSE) == XML_STATUS_ERROR) {
      std::size_t complete = handler.pages_seen();
      drain();
      auto at = static_cast<std::size_t>(XML_GetCurrentByteIndex(parser));
      throw ParseError("malformed dump XML after " +
                           std::to_string(complete) +
                           " page(s), at byte " + std::to_string(at) + ": " +
                           XML_ErrorString(XML_GetErrorCode(parser)),
                       at);
    }
    drain();
    if (last) break;
  }
  return stats;
}

bool has_extension(const fs::path& p, const std::vector<std::string>& exts) {
  std::string ext = lowercase(p.extension().string());
  return std::find(exts.begin(), exts.end(), ext) != exts.end();
}

}  // namespace

std::string_view source_name(Source source) {
  return source == Source::kWikipedia ? "wikipedia" : "expert";
}

std::string wiki_url(std::string_view base, std::string_view title) {
  std::string t(title);
  std::replace(t.begin(), t.end(), ' ', '_');
  return std::string(base) + iri_escape(t);
}

IngestStats read_wiki_dump_bytes(std::string_view xml,
                                 const WikiDumpOptions& options,
                                 const DocumentSink& sink) {
  std::size_t offset = 0;
  return parse_dump(
      [&](char* buffer, std::size_t size) {
        std::size_t n = std::min(size, xml.size() - offset);
        std::copy_n(xml.data() + offset, n, buffer);
        offset += n;
        return n;
      },
      options, sink);
}

IngestStats read_wiki_dump(const fs::path& path, const WikiDumpOptions& options,
                           const DocumentSink& sink) {
  std::string ext = lowercase(path.extension().string());
  if (ext == ".bz2") {
    throw IoError("bzip2 dumps are not supported, decompress first: " +
                  path.string());
  }
  if (ext == ".gz") {
    gzFile file = gzopen(path.c_str(), "rb");
    if (file == nullptr) throw IoError("cannot open " + path.string());
    std::unique_ptr<gzFile_s, decltype(&gzclose)> guard(file, &gzclose);
    return parse_dump(
        [&](char* buffer, std::size_t size) -> std::size_t {
          int n = gzread(file, buffer, static_cast<unsigned>(size));
          if (n < 0) throw IoError("decompression failed: " + path.string());
          return static_cast<std::size_t>(n);
        },
        options, sink);
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return parse_dump(
      [&](char* buffer, std::size_t size) -> std::size_t {
        in.read(buffer, static_cast<std::streamsize>(size));
        if (in.bad()) throw IoError("read failed: " + path.string());
        return static_cast<std::size_t>(in.gcount());
      },
      options, sink);
}

IngestStats read_expert_docs(const fs::path& root,
                             const ExpertDocsOptions& options,
                             const DocumentSink& sink) {
  std::error_code ec;
  if (!fs::is_directory(root, ec)) {
    throw IoError("not a directory: " + root.string());
  }
  std::vector<fs::path> files;
  for (auto it = fs::recursive_directory_iterator(
           root, fs::directory_options::skip_permission_denied, ec);
       !ec && it != fs::recursive_directory_iterator(); it.increment(ec)) {
    if (it->is_regular_file(ec)) files.push_back(it->path());
  }
  if (ec) throw IoError("cannot walk " + root.string() + ": " + ec.message());
  std::sort(files.begin(), files.end());

  IngestStats stats;
  for (const auto& file : files) {
    ++stats.seen;
    if (!has_extension(file, options.extensions)) {
      ++stats.skipped;
      continue;
    }
    fs::path rel = file.lexically_relative(root);
    std::vector<std::string> parts;
    for (const auto& part : rel) parts.push_back(part.string());
    if (parts.size() <= options.team_component + 1) {
      spdlog::warn("skipping {}: no team directory", file.string());
      ++stats.skipped;
      continue;
    }
    std::string html;
    try {
      html = read_file(file);
    } catch (const IoError& e) {
      spdlog::warn("skipping unreadable {}: {}", file.string(), e.what());
      ++stats.skipped;
      continue;
    }
    std::string team = parts[options.team_component];
    std::string name;
    for (std::size_t i = options.team_component + 1; i < parts.size(); ++i) {
      if (!name.empty()) name += '/';
      name += parts[i];
    }

    Document doc;
    doc.doc_id = "ex:" + team + "/" + name;
    doc.source = Source::kExpert;
    doc.title = extract_html_title(html);
    if (doc.title.empty()) doc.title = team + "/" + name;
    doc.url = options.url_base.empty()
                  ? file_uri(file)
                  : options.url_base + iri_escape(rel.generic_string());
    doc.team = std::move(team);
    doc.clean = make_clean_text(strip_boilerplate(html));
    ++stats.yielded;
    sink(std::move(doc));
  }
  if (stats.yielded == 0) {
    throw ValidationError("zero documents found under " + root.string());
  }
  return stats;
}

}  // namespace epl
