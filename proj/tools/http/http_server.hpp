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

#pragma once

#include <functional>
#include <memory>
#include <string>

#include "rls/service.hpp"

namespace rls {

struct ServeOptions {
  std::string host = "127.0.0.1";
  int port = 8080;  // 0 binds an ephemeral port
  std::string static_dir;
  unsigned threads = 8;
};

/// JSON API over HTTP. start() returns once the socket is bound; stop()
/// (or destruction) shuts the listener down.
class HttpServer {
 public:
  HttpServer(Service& service, ServeOptions options);
  ~HttpServer();

  /// Binds and starts serving on a background thread; returns the port.
  /// Throws Error(Io) when the port cannot be bound.
  int start();
  void stop();
  /// Serves on the calling thread until stop().
  void run();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace rls
