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
#include "epl/cli.hpp"

#include <pthread.h>
#include <signal.h>

#include <atomic>
#include <chrono>
#include <ctime>
#include <memory>
#include <thread>

#include "CLI11.hpp"
#include "epl/error.hpp"
#include "epl/file_util.hpp"
#include "epl/graph.hpp"
#include "epl/ingest.hpp"
#include "epl/matcher.hpp"
#include "epl/rdf.hpp"
#include "epl/service.hpp"
#include "epl/sparql.hpp"
#include "epl/taxonomy.hpp"
#include "json.hpp"

namespace epl {
namespace {

struct IndexConfig {
  std::string taxonomy;
  std::string wiki_dump;
  std::string expert_root;
  std::string output;
  std::size_t min_tokens = 1;
  std::string stoplist;
  std::string base_iri{kDefaultBaseIri};
  std::string wiki_url_base = "https://en.wikipedia.org/wiki/";
  std::string expert_url_base;
  std::size_t team_component = 0;
  bool no_alt_labels = false;
  bool lenient = false;
  std::size_t progress_every = 1000;
};

struct ServeConfig {
  std::string dataset;
  std::string listen = "127.0.0.1:8080";
  std::string base_iri{kDefaultBaseIri};
  std::size_t max_query_bytes = 64 * 1024;
};

struct QueryConfig {
  std::string dataset;
  std::string query_file;
  std::string format = "tsv";
};

int taxonomy_check(const std::string& path, bool lenient, std::ostream& out) {
  Taxonomy taxonomy = load_skos_file(path, lenient);
  std::size_t roots = 0;
  for (const auto& [id, c] : taxonomy.concepts()) roots += c.broader.empty();
  out << "concepts: " << taxonomy.size() << "\n"
      << "labels: " << taxonomy.label_count() << "\n"
      << "broader edges: " << taxonomy.broader_edge_count() << "\n"
      << "roots: " << roots << "\n";
  return kExitOk;
}

int run_index(const IndexConfig& cfg, std::ostream& out, std::ostream& err) {
  Taxonomy taxonomy = load_skos_file(cfg.taxonomy, cfg.lenient);
  LexiconOptions lexicon_options;
  lexicon_options.min_tokens = cfg.min_tokens;
  lexicon_options.include_alt_labels = !cfg.no_alt_labels;
  if (!cfg.stoplist.empty()) lexicon_options.stoplist = load_stoplist(cfg.stoplist);
  const PhraseLexicon lexicon = build_lexicon(taxonomy, lexicon_options);
  const Matcher matcher(lexicon);
  err << "taxonomy: " << taxonomy.size() << " concepts, " << lexicon.size()
      << " phrases\n";

  GraphBuilder builder(taxonomy, Vocabulary{cfg.base_iri});
  std::size_t processed = 0;
  auto sink = [&](Document&& doc) {
    builder.add_document(DocumentInfo::of(doc));
    builder.add_annotations(annotate(doc.doc_id, doc.clean, matcher));
    if (cfg.progress_every > 0 && ++processed % cfg.progress_every == 0) {
      err << "processed " << processed << " documents\n";
    }
  };

  WikiDumpOptions wiki_options;
  wiki_options.url_base = cfg.wiki_url_base;
  IngestStats wiki = read_wiki_dump(cfg.wiki_dump, wiki_options, sink);
  err << "wiki dump: " << wiki.yielded << " articles, " << wiki.skipped
      << " pages skipped\n";

  ExpertDocsOptions expert_options;
  expert_options.team_component = cfg.team_component;
  expert_options.url_base = cfg.expert_url_base;
  IngestStats experts = read_expert_docs(cfg.expert_root, expert_options, sink);
  err << "expert docs: " << experts.yielded << " pages, " << experts.skipped
      << " files skipped\n";

  Dataset dataset = builder.build();
  write_file(cfg.output, serialize_ntriples(dataset));

  GraphSummary s = builder.summary();
  out << "pages tagged: " << s.pages_tagged
      << ", expert docs tagged: " << s.expert_docs_tagged
      << ", concepts used: " << s.concepts_used << "\n";
  nlohmann::json summary = {{"wiki_articles", s.wiki_documents},
                            {"expert_docs", s.expert_documents},
                            {"pages_tagged", s.pages_tagged},
                            {"expert_docs_tagged", s.expert_docs_tagged},
                            {"concepts_used", s.concepts_used},
                            {"links", s.links},
                            {"triples", dataset.size()},
                            {"output", cfg.output}};
  out << summary.dump() << "\n";
  return kExitOk;
}

std::pair<std::string, int> parse_listen(const std::string& listen) {
  auto colon = listen.rfind(':');
  if (colon == std::string::npos) throw CLI::ValidationError("--listen", "expected HOST:PORT");
  int port = 0;
  try {
    port = std::stoi(listen.substr(colon + 1));
  } catch (const std::exception&) {
    throw CLI::ValidationError("--listen", "bad port in " + listen);
  }
  if (port < 0 || port > 65535) throw CLI::ValidationError("--listen", "port out of range");
  return {listen.substr(0, colon), port};
}

int run_serve(const ServeConfig& cfg, std::ostream& out, std::ostream& err) {
  auto [host, port] = parse_listen(cfg.listen);
  auto dataset = std::make_shared<const Dataset>(parse_ntriples(read_file(cfg.dataset)));
  ExpertService service(dataset, Vocabulary{cfg.base_iri}, cfg.max_query_bytes);
  HttpServer server(service);

  // Handle SIGINT/SIGTERM on a dedicated thread; block them everywhere else
  // (threads spawned by the server inherit the mask).
  sigset_t signals;
  sigemptyset(&signals);
  sigaddset(&signals, SIGINT);
  sigaddset(&signals, SIGTERM);
  sigset_t previous;
  pthread_sigmask(SIG_BLOCK, &signals, &previous);
  std::atomic<bool> done{false};
  std::thread watcher([&] {
    timespec timeout{0, 200 * 1000 * 1000};
    while (!done) {
      if (sigtimedwait(&signals, nullptr, &timeout) > 0) {
        server.stop();
        return;
      }
    }
  });

  int exit_code = kExitOk;
  try {
    int bound = server.bind(host, port);
    out << "serving " << dataset->size() << " triples on http://" << host << ":"
        << bound << std::endl;
    server.listen();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    exit_code = kExitData;
  }
  done = true;
  watcher.join();
  pthread_sigmask(SIG_SETMASK, &previous, nullptr);
  return exit_code;
}

int run_query(const QueryConfig& cfg, std::ostream& out) {
  Dataset dataset = parse_ntriples(read_file(cfg.dataset));
  ResultSet results = evaluate(parse_sparql(read_file(cfg.query_file)), dataset);
  if (cfg.format == "json") {
    out << results_json(results) << "\n";
    return kExitOk;
  }
  for (std::size_t i = 0; i < results.variables.size(); ++i) {
    out << (i ? "\t" : "") << "?" << results.variables[i];
  }
  out << "\n";
  for (const auto& row : results.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << (i ? "\t" : "") << to_ntriples(row[i]);
    }
    out << "\n";
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Link Wikipedia pages to local experts through a shared taxonomy",
               "epl"};
  app.require_subcommand(1);

  std::string skos_path;
  bool check_lenient = false;
  auto* check = app.add_subcommand("taxonomy-check", "Validate a SKOS taxonomy file");
  check->add_option("skos", skos_path, "SKOS RDF/XML file")
      ->required()
      ->check(CLI::ExistingFile)
      ->envname("EPL_TAXONOMY");
  check->add_flag("--lenient", check_lenient, "Warn about dangling broader edges");

  IndexConfig index_cfg;
  auto* index = app.add_subcommand("index", "Annotate both corpora and write the link graph");
  index->add_option("--taxonomy", index_cfg.taxonomy, "SKOS taxonomy file")
      ->required()->check(CLI::ExistingFile)->envname("EPL_TAXONOMY");
  index->add_option("--wiki-dump", index_cfg.wiki_dump,
                    "MediaWiki pages-articles XML dump (.xml or .xml.gz)")
      ->required()->check(CLI::ExistingFile)->envname("EPL_WIKI_DUMP");
  index->add_option("--expert-root", index_cfg.expert_root,
                    "Directory of report pages laid out <team>/<file>.html")
      ->required()->check(CLI::ExistingDirectory)->envname("EPL_EXPERT_ROOT");
  index->add_option("-o,--output", index_cfg.output, "N-Triples output path")
      ->required()->envname("EPL_OUTPUT");
  index->add_option("--min-tokens", index_cfg.min_tokens,
                    "Ignore labels with fewer tokens")
      ->check(CLI::PositiveNumber)->envname("EPL_MIN_TOKENS")->capture_default_str();
  index->add_option("--stoplist", index_cfg.stoplist,
                    "File of label phrases to ignore, one per line")
      ->check(CLI::ExistingFile)->envname("EPL_STOPLIST");
  index->add_option("--base-iri", index_cfg.base_iri, "Vocabulary namespace")
      ->envname("EPL_BASE_IRI")->capture_default_str();
  index->add_option("--wiki-url-base", index_cfg.wiki_url_base,
                    "Prefix of article URLs")
      ->envname("EPL_WIKI_URL_BASE")->capture_default_str();
  index->add_option("--expert-url-base", index_cfg.expert_url_base,
                    "Prefix of expert page URLs (default: file:// URIs)")
      ->envname("EPL_EXPERT_URL_BASE");
  index->add_option("--team-component", index_cfg.team_component,
                    "Path component under the root that names the team")
      ->envname("EPL_TEAM_COMPONENT")->capture_default_str();
  index->add_flag("--no-alt-labels", index_cfg.no_alt_labels,
                  "Match preferred labels only")
      ->envname("EPL_NO_ALT_LABELS");
  index->add_flag("--lenient", index_cfg.lenient,
                  "Warn about dangling broader edges instead of failing")
      ->envname("EPL_LENIENT");
  index->add_option("--progress-every", index_cfg.progress_every,
                    "Report progress every N documents (0 = never)")
      ->envname("EPL_PROGRESS_EVERY")->capture_default_str();

  ServeConfig serve_cfg;
  auto* serve = app.add_subcommand("serve", "Serve a link graph over HTTP");
  serve->add_option("--dataset", serve_cfg.dataset, "N-Triples file from index")
      ->required()->check(CLI::ExistingFile)->envname("EPL_DATASET");
  serve->add_option("--listen", serve_cfg.listen, "HOST:PORT")
      ->envname("EPL_LISTEN")->capture_default_str();
  serve->add_option("--base-iri", serve_cfg.base_iri, "Vocabulary namespace")
      ->envname("EPL_BASE_IRI")->capture_default_str();
  serve->add_option("--max-query-bytes", serve_cfg.max_query_bytes,
                    "Largest accepted SPARQL query")
      ->check(CLI::PositiveNumber)->envname("EPL_MAX_QUERY_BYTES")->capture_default_str();

  QueryConfig query_cfg;
  auto* query = app.add_subcommand("query", "Run a SPARQL query against a link graph");
  query->add_option("--dataset", query_cfg.dataset, "N-Triples file")
      ->required()->check(CLI::ExistingFile)->envname("EPL_DATASET");
  query->add_option("query", query_cfg.query_file, "File holding the SPARQL query")
      ->required()->check(CLI::ExistingFile);
  query->add_option("--format", query_cfg.format, "tsv or json")
      ->check(CLI::IsMember({"tsv", "json"}))->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << (app.get_subcommands().empty() ? app.help()
                                          : app.get_subcommands().front()->help());
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*check) return taxonomy_check(skos_path, check_lenient, out);
    if (*index) return run_index(index_cfg, out, err);
    if (*serve) return run_serve(serve_cfg, out, err);
    if (*query) return run_query(query_cfg, out);
  } catch (const CLI::ValidationError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace epl
