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
#ifndef EPL_SERVICE_HPP_
#define EPL_SERVICE_HPP_

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "epl/graph.hpp"
#include "epl/rdf.hpp"
#include "epl/sparql.hpp"

namespace epl {

// Transport-independent request; parameters are already URL-decoded.
struct HttpRequest {
  std::string method = "GET";
  std::string path;
  std::map<std::string, std::string> params;
  std::string body;
  std::string content_type;
};

struct HttpResponse {
  int status = 200;
  std::string content_type = "application/json";
  std::string body;
  std::vector<std::pair<std::string, std::string>> headers;

  // Empty string when absent.
  std::string header(std::string_view name) const;
};

struct TeamLink {
  std::string team;
  std::string doc_url;

  auto operator<=>(const TeamLink&) const = default;
};

// Concept shared by a Wikipedia page and expert documents.
struct ExpertHit {
  std::string concept_id;
  std::string label;
  std::vector<TeamLink> teams;  // non-empty, sorted, no duplicates

  bool operator==(const ExpertHit&) const = default;
};

// SPARQL 1.1 results JSON for a result set.
std::string results_json(const ResultSet& results);

// Groups rows of the canonical experts query (?concept ?label ?team ?doc)
// by concept. Hits are sorted by label, then concept IRI.
std::vector<ExpertHit> group_expert_rows(const ResultSet& rows);

// Read-only handlers over a frozen Dataset; safe for concurrent use.
// Every response carries Access-Control-Allow-Origin: *.
class ExpertService {
 public:
  ExpertService(std::shared_ptr<const Dataset> dataset, Vocabulary vocabulary,
                std::size_t max_query_bytes);

  // GET with a query parameter, or POST with an application/sparql-query
  // body or a form-encoded query parameter.
  HttpResponse handle_sparql(const HttpRequest& request) const;
  // GET /experts?title=T
  HttpResponse handle_experts(const HttpRequest& request) const;
  HttpResponse handle_healthz() const;
  // Dispatch on path; 404 for anything else.
  HttpResponse handle(const HttpRequest& request) const;

  std::vector<ExpertHit> experts_for(std::string_view title) const;

  const Dataset& dataset() const { return *dataset_; }

 private:
  std::shared_ptr<const Dataset> dataset_;
  Vocabulary vocabulary_;
  std::size_t max_query_bytes_;
};

// HTTP front end for an ExpertService.
class HttpServer {
 public:
  explicit HttpServer(const ExpertService& service);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  // Binds; port 0 picks a free port. Returns the bound port. Throws
  // IoError on failure.
  int bind(const std::string& host, int port);
  // Serves until stop() is called.
  void listen();
  void stop();
  bool is_running() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace epl

#endif  // EPL_SERVICE_HPP_
