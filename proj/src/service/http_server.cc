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

#include <httplib.h>

#include "epicorpus/common/error.h"
#include "epicorpus/corpus/json.h"
#include "epicorpus/service/service.h"

namespace epicorpus {

namespace {

QueryParams ParamsOf(const httplib::Request &req) {
  QueryParams out;
  for (const auto &[key, value] : req.params) out.emplace(key, value);
  return out;
}

void Send(httplib::Response &res, const HttpResponse &r) {
  res.status = r.status;
  res.set_content(r.body, r.content_type);
}

}  // namespace

struct HttpServer::Impl {
  SearchService &service;
  httplib::Server server;
  explicit Impl(SearchService &s) : service(s) {}
};

HttpServer::HttpServer(SearchService &service)
    : impl_(std::make_unique<Impl>(service)) {
  SearchService &svc = impl_->service;
  httplib::Server &server = impl_->server;
  server.Get("/search", [&svc](const httplib::Request &req, httplib::Response &res) {
    Send(res, svc.Search(ParamsOf(req)));
  });
  server.Get(R"(/documents/([^/]+)/search)",
             [&svc](const httplib::Request &req, httplib::Response &res) {
               Send(res, svc.DocumentSearch(req.matches[1], ParamsOf(req)));
             });
  server.Get(R"(/documents/([^/]+))",
             [&svc](const httplib::Request &req, httplib::Response &res) {
               Send(res, svc.Document(req.matches[1]));
             });
  server.Get("/healthz", [&svc](const httplib::Request &, httplib::Response &res) {
    Send(res, svc.Health());
  });
  server.Get(R"(/pages/([^/]+)/([0-9]+)\.png)",
             [&svc](const httplib::Request &req, httplib::Response &res) {
               Send(res, svc.PageImage(req.matches[1], req.matches[2]));
             });
  server.Options(R"(.*)", [](const httplib::Request &, httplib::Response &res) {
    res.status = 204;
  });
  server.set_post_routing_handler(
      [&svc](const httplib::Request &, httplib::Response &res) {
        res.set_header("Access-Control-Allow-Origin", svc.config().cors_origin);
        res.set_header("Access-Control-Allow-Methods", "GET, OPTIONS");
        res.set_header("Access-Control-Allow-Headers", "Content-Type");
      });
  server.set_error_handler([](const httplib::Request &, httplib::Response &res) {
    if (res.body.empty()) {
      res.set_content(R"({"error":"not_found","message":"no such endpoint"})",
                      "application/json");
    }
  });
  server.set_exception_handler(
      [](const httplib::Request &, httplib::Response &res, std::exception_ptr ep) {
        std::string message = "internal error";
        try {
          std::rethrow_exception(ep);
        } catch (const std::exception &e) {
          message = e.what();
        } catch (...) {
        }
        res.status = 500;
        res.set_content(R"({"error":"internal","message":)" +
                            Json(message).dump() + "}",
                        "application/json");
      });
}

HttpServer::~HttpServer() { Stop(); }

int HttpServer::Bind() {
  const ServiceConfig &config = impl_->service.config();
  int port = config.port;
  if (port == 0) {
    port = impl_->server.bind_to_any_port(config.host);
  } else if (!impl_->server.bind_to_port(config.host, port)) {
    port = -1;
  }
  if (port < 0) {
    throw Error(ErrorKind::kIo, "cannot listen on " + config.host + ":" +
                                    std::to_string(config.port));
  }
  return port;
}

void HttpServer::Listen() { impl_->server.listen_after_bind(); }

void HttpServer::Stop() {
  if (impl_) impl_->server.stop();
}

}  // namespace epicorpus
