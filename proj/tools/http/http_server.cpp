// Copyright 2026 The RLS Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "http_server.hpp"

#include <httplib.h>

#include <thread>

#include "rls/errors.hpp"

namespace rls {

struct HttpServer::Impl {
  Service& service;
  ServeOptions options;
  httplib::Server server;
  std::thread thread;
  int port = 0;

  Impl(Service& s, ServeOptions o) : service(s), options(std::move(o)) {
    const unsigned threads = std::max(1u, options.threads);
    server.new_task_queue = [threads] { return new httplib::ThreadPool(threads); };
    auto forward = [this](const httplib::Request& req, httplib::Response& res) {
      auto reply = service.handle(req.method, req.path, req.body);
      res.status = reply.status;
      res.set_content(reply.body.dump(), "application/json");
    };
    for (const char* path : {"/theory", "/implications", "/contradictions"}) server.Get(path, forward);
    for (const char* path : {"/theory", "/edit", "/query", "/whatif", "/abduce"}) server.Post(path, forward);
    if (!options.static_dir.empty() && !server.set_mount_point("/", options.static_dir)) {
      throw Error(ErrorCode::Io, "static directory not found: " + options.static_dir);
    }
  }

  int bind() {
    if (options.port == 0) {
      port = server.bind_to_any_port(options.host);
    } else {
      port = server.bind_to_port(options.host, options.port) ? options.port : -1;
    }
    if (port <= 0) {
      throw Error(ErrorCode::Io, "cannot bind " + options.host + ":" + std::to_string(options.port));
    }
    return port;
  }
};

HttpServer::HttpServer(Service& service, ServeOptions options)
    : impl_(std::make_unique<Impl>(service, std::move(options))) {}

HttpServer::~HttpServer() { stop(); }

int HttpServer::start() {
  int port = impl_->bind();
  impl_->thread = std::thread([this] { impl_->server.listen_after_bind(); });
  impl_->server.wait_until_ready();
  return port;
}

void HttpServer::stop() {
  impl_->server.stop();
  if (impl_->thread.joinable()) impl_->thread.join();
}

void HttpServer::run() {
  impl_->bind();
  impl_->server.listen_after_bind();
}

}  // namespace rls
