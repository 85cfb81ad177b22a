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
#ifndef EPL_INGEST_HPP_
#define EPL_INGEST_HPP_

#include <cstddef>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "epl/textproc.hpp"

namespace epl {

enum class Source { kWikipedia, kExpert };

// "wikipedia" or "expert".
std::string_view source_name(Source source);

struct Document {
  std::string doc_id;  // "wp:<title>" or "ex:<team>/<file>"
  Source source = Source::kWikipedia;
  std::string title;
  std::string url;  // absolute IRI
  std::optional<std::string> team;  // set iff source == kExpert
  CleanText clean;
};

// Counts for one reader run: yielded + skipped == seen.
struct IngestStats {
  std::size_t seen = 0;
  std::size_t yielded = 0;
  std::size_t skipped = 0;
};

using DocumentSink = std::function<void(Document&&)>;

struct WikiDumpOptions {
  std::string url_base = "https://en.wikipedia.org/wiki/";
};

// base + title with spaces turned into underscores, IRI-escaped.
std::string wiki_url(std::string_view base, std::string_view title);

// Streams namespace-0, non-redirect pages of a MediaWiki pages-articles dump.
// Files ending in .gz are decompressed; .bz2 is rejected. Memory use is
// bounded by one page. Throws IoError when the file cannot be read and
// ParseError (with the number of pages read so far) on malformed XML.
IngestStats read_wiki_dump(const std::filesystem::path& path,
                           const WikiDumpOptions& options,
                           const DocumentSink& sink);

// Same, over an in-memory dump.
IngestStats read_wiki_dump_bytes(std::string_view xml,
                                 const WikiDumpOptions& options,
                                 const DocumentSink& sink);

struct ExpertDocsOptions {
  // Which component of the path relative to root names the team.
  std::size_t team_component = 0;
  // When empty, URLs are file:// URIs of the page files; otherwise
  // url_base + the path relative to root.
  std::string url_base;
  std::vector<std::string> extensions = {".html", ".htm"};
};

// One Document per report page under root, visited in sorted path order.
// Unreadable files and files outside a team directory are skipped with a
// warning. Throws IoError if root is not a directory and ValidationError
// when no document was produced.
IngestStats read_expert_docs(const std::filesystem::path& root,
                             const ExpertDocsOptions& options,
                             const DocumentSink& sink);

}  // namespace epl

#endif  // EPL_INGEST_HPP_
