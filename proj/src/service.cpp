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
#include "epl/service.hpp"

#include <httplib.h>

#include <algorithm>
#include "json.hpp"

#include "epl/error.hpp"

namespace epl {
namespace {

using nlohmann::json;

constexpr char kCorsHeader[] = "Access-Control-Allow-Origin";

HttpResponse json_response(int status, const json& body) {
  HttpResponse r;
  r.status = status;
  r.body = body.dump();
  r.headers.emplace_back(kCorsHeader, "*");
  return r;
}

HttpResponse error_response(int status, const std::string& message) {
  return json_response(status, json{{"error", message}});
}

std::string underscores_to_spaces(std::string s) {
  std::replace(s.begin(), s.end(), '_', ' ');
  return s;
}

}  // namespace

std::string HttpResponse::header(std::string_view name) const {
  for (const auto& [k, v] : headers) {
    if (k == name) return v;
  }
  return {};
}

std::string results_json(const ResultSet& results) {
  json bindings = json::array();
  for (const auto& row : results.rows) {
    json b = json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      b[results.variables[i]] = {
          {"type", row[i].is_iri() ? "uri" : "literal"},
          {"value", row[i].value}};
    }
    bindings.push_back(std::move(b));
  }
  json out = {{"head", {{"vars", results.variables}}},
              {"results", {{"bindings", std::move(bindings)}}}};
  return out.dump();
}

std::vector<ExpertHit> group_expert_rows(const ResultSet& rows) {
  auto column = [&](std::string_view name) {
    auto it = std::find(rows.variables.begin(), rows.variables.end(), name);
    if (it == rows.variables.end()) {
      throw Error("experts result lacks ?" + std::string(name));
    }
    return static_cast<std::size_t>(it - rows.variables.begin());
  };
  const std::size_t concept_col = column("concept");
  const std::size_t label_col = column("label");
  const std::size_t team_col = column("team");
  const std::size_t doc_col = column("doc");

  std::map<std::string, ExpertHit> by_concept;
  for (const auto& row : rows.rows) {
    ExpertHit& hit = by_concept[row[concept_col].value];
    hit.concept_id = row[concept_col].value;
    hit.label = row[label_col].value;
    hit.teams.push_back({row[team_col].value, row[doc_col].value});
  }
  std::vector<ExpertHit> hits;
  for (auto& [id, hit] : by_concept) {
    std::sort(hit.teams.begin(), hit.teams.end());
    hit.teams.erase(std::unique(hit.teams.begin(), hit.teams.end()),
                    hit.teams.end());
    hits.push_back(std::move(hit));
  }
  std::sort(hits.begin(), hits.end(), [](const ExpertHit& a, const ExpertHit& b) {
    return std::tie(a.label, a.concept_id) < std::tie(b.label, b.concept_id);
  });
  return hits;
}

ExpertService::ExpertService(std::shared_ptr<const Dataset> dataset,
                             Vocabulary vocabulary, std::size_t max_query_bytes)
    : dataset_(std::move(dataset)),
      vocabulary_(std::move(vocabulary)),
      max_query_bytes_(max_query_bytes) {}

HttpResponse ExpertService::handle_sparql(const HttpRequest& request) const {
  std::string query;
  if (request.method == "GET") {
    auto it = request.params.find("query");
    if (it == request.params.end()) {
      return error_response(400, "missing query parameter");
    }
    query = it->second;
  } else if (request.method == "POST") {
    if (request.body.size() > max_query_bytes_) {
      return error_response(413, "query exceeds " +
                                     std::to_string(max_query_bytes_) + " bytes");
    }
    auto it = request.params.find("query");
    if (request.content_type.starts_with("application/sparql-query") ||
        it == request.params.end()) {
      query = request.body;
    } else {
      query = it->second;
    }
  } else {
    return error_response(405, "use GET or POST");
  }
  if (query.size() > max_query_bytes_) {
    return error_response(413, "query exceeds " +
                                   std::to_string(max_query_bytes_) + " bytes");
  }
  try {
    ResultSet results = evaluate(parse_sparql(query), *dataset_);
    HttpResponse r = json_response(200, json::object());
    r.content_type = "application/sparql-results+json";
    r.body = results_json(results);
    return r;
  } catch (const ParseError& e) {
    return error_response(400, e.what());
  }
}

std::vector<ExpertHit> ExpertService::experts_for(std::string_view title) const {
  Query q = parse_sparql(canonical_experts_query(title, vocabulary_));
  return group_expert_rows(evaluate(q, *dataset_));
}

HttpResponse ExpertService::handle_experts(const HttpRequest& request) const {
  auto it = request.params.find("title");
  if (it == request.params.end() || it->second.empty()) {
    return error_response(400, "missing title parameter");
  }
  std::string title = underscores_to_spaces(it->second);
  if (title.size() > max_query_bytes_) {
    return error_response(413, "title too long");
  }
  json hits = json::array();
  for (const auto& hit : experts_for(title)) {
    json teams = json::array();
    for (const auto& t : hit.teams) {
      teams.push_back({{"team", t.team}, {"doc_url", t.doc_url}});
    }
    hits.push_back({{"concept", hit.concept_id},
                    {"label", hit.label},
                    {"teams", std::move(teams)}});
  }
  return json_response(200, {{"title", title}, {"hits", std::move(hits)}});
}

HttpResponse ExpertService::handle_healthz() const {
  HttpResponse r;
  r.content_type = "text/plain";
  r.body = "ok";
  r.headers.emplace_back(kCorsHeader, "*");
  return r;
}

HttpResponse ExpertService::handle(const HttpRequest& request) const {
  if (request.method == "OPTIONS") {
    HttpResponse r;
    r.status = 204;
    r.content_type = "text/plain";
    r.headers.emplace_back(kCorsHeader, "*");
    r.headers.emplace_back("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
    r.headers.emplace_back("Access-Control-Allow-Headers", "Content-Type");
    return r;
  }
  if (request.path == "/sparql") return handle_sparql(request);
  if (request.path == "/experts") {
    if (request.method != "GET") return error_response(405, "use GET");
    return handle_experts(request);
  }
  if (request.path == "/healthz") return handle_healthz();
  return error_response(404, "not found: " + request.path);
}

struct HttpServer::Impl {
  const ExpertService& service;
  httplib::Server server;

  explicit Impl(const ExpertService& s) : service(s) {}
};

HttpServer::HttpServer(const ExpertService& service)
    : impl_(std::make_unique<Impl>(service)) {
  auto handler = [this](const httplib::Request& req, httplib::Response& res) {
    HttpRequest request;
    request.method = req.method;
    request.path = req.path;
    for (const auto& [k, v] : req.params) request.params.emplace(k, v);
    request.body = req.body;
    request.content_type = req.get_header_value("Content-Type");
    HttpResponse response = impl_->service.handle(request);
    res.status = response.status;
    for (const auto& [k, v] : response.headers) res.set_header(k, v);
    res.set_content(response.body, response.content_type);
  };
  auto& server = impl_->server;
  for (const char* path : {"/sparql", "/experts", "/healthz"}) {
    server.Get(path, handler);
    server.Post(path, handler);
    server.Options(path, handler);
  }
  server.set_error_handler([](const httplib::Request& req, httplib::Response& res) {
    if (!res.body.empty()) return;
    res.set_header(kCorsHeader, "*");
    res.set_content(json{{"error", "not found: " + req.path}}.dump(),
                    "application/json");
  });
  server.set_payload_max_length(16 << 20);
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind(const std::string& host, int port) {
  int bound = port == 0 ? impl_->server.bind_to_any_port(host)
                        : (impl_->server.bind_to_port(host, port) ? port : -1);
  if (bound < 0) {
    throw IoError("cannot bind " + host + ":" + std::to_string(port));
  }
  return bound;
}

void HttpServer::listen() { impl_->server.listen_after_bind(); }

void HttpServer::stop() {
  if (impl_->server.is_running()) impl_->server.stop();
}

bool HttpServer::is_running() const { return impl_->server.is_running(); }

}  // namespace epl
