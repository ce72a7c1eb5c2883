// Copyright 2026 The Epicorpus Authors.
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

#ifndef EPICORPUS_SERVICE_SERVICE_H_
#define EPICORPUS_SERVICE_SERVICE_H_

#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "epicorpus/index/index.h"

namespace epicorpus {

struct ServiceConfig {
  std::string host = "0.0.0.0";
  int port = 8080;
  std::filesystem::path index_dir;       // empty: start without an index
  std::filesystem::path page_image_dir;  // <dir>/<doc_id>/<page>.png
  std::string cors_origin = "*";
  int reload_seconds = 5;  // manifest polling interval, 0 disables
};

// Reads PORT, INDEX_DIR, PAGE_IMAGE_DIR and CORS_ORIGIN over `base`.
// Throws Error(kInvalidArgument) on a malformed PORT.
ServiceConfig ConfigFromEnv(
    ServiceConfig base = {},
    const std::function<const char *(const char *)> &getenv = std::getenv);

struct HttpResponse {
  int status = 200;
  std::string content_type = "application/json";
  std::string body;
};

using QueryParams = std::map<std::string, std::string>;

// Request handlers as plain functions of (snapshot, request), so they can be
// tested without sockets. Every JSON response from a loaded snapshot carries
// its index_version.
class SearchService {
 public:
  explicit SearchService(ServiceConfig config = {});

  // The snapshot every request starts from; swapping never disturbs
  // requests already holding the previous one.
  std::shared_ptr<const CorpusIndex> Snapshot() const;
  void Swap(std::shared_ptr<const CorpusIndex> index);

  // Loads config.index_dir when its manifest names a version other than
  // the current snapshot's.
  // Returns true when a new snapshot was installed. Load failures leave the
  // current snapshot in place and are rethrown.
  bool ReloadIfChanged();

  // GET /search?q=&page=&size=&facets=
  HttpResponse Search(const QueryParams &params) const;
  // GET /documents/{id}
  HttpResponse Document(const std::string &doc_id) const;
  // GET /documents/{id}/search?q=
  HttpResponse DocumentSearch(const std::string &doc_id,
                              const QueryParams &params) const;
  // GET /healthz
  HttpResponse Health() const;
  // GET /pages/{doc}/{page}.png
  HttpResponse PageImage(const std::string &doc_id,
                         const std::string &page) const;

  const ServiceConfig &config() const { return config_; }

  static constexpr std::size_t kMaxPageSize = 100;
  static constexpr std::size_t kSnippetsPerHit = 3;

 private:
  ServiceConfig config_;
  mutable std::mutex mutex_;
  std::shared_ptr<const CorpusIndex> snapshot_;
};

// Runs the HTTP server on config().host/port until Stop(). Handlers run
// concurrently on the server's thread pool.
class HttpServer {
 public:
  explicit HttpServer(SearchService &service);
  ~HttpServer();
  HttpServer(const HttpServer &) = delete;
  HttpServer &operator=(const HttpServer &) = delete;

  // Binds (port 0 picks a free port) and returns the bound port, or throws
  // Error(kIo).
  int Bind();
  // Serves until Stop(); call after Bind.
  void Listen();
  void Stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace epicorpus

#endif  // EPICORPUS_SERVICE_SERVICE_H_
