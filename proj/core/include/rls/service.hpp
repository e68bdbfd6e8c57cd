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

// JSON request handling behind the HTTP API, independent of any transport.
//
//   GET  /theory          current theory, source sentences, closure records
//   POST /theory          {"theory": {...}} | {"sentences": [...], "source":
//                         "gold"|"template"} | {"encoded": ["...", ...]}
//   POST /edit            {"edits": [...]} -> theory and implication delta
//   POST /query           {"query": "<encoded>"} -> truth and proof
//   POST /whatif          {"edits": [...], "query": "..."}; theory untouched
//   GET  /implications
//   GET  /contradictions
//   POST /abduce          {"query": "...", "max_size": 2}
//
// Edits: {"op": "add_fact", "id", "literal", "source"?}, {"op":
// "remove_fact", "id"}, {"op": "replace_fact", "id", "literal"}, {"op":
// "add_rule", "id", "rule", "source"?}, {"op": "remove_rule", "id"}, {"op":
// "replace_rule", "id", "rule"}. Literals and rules are encoded strings;
// literals may also be literal objects.
//
// Every success body carries "unifications". Failures return
// {"error": {"code", "message", ...}} with 400, 404 for unknown routes and
// 422 for NotStratified.

#pragma once

#include <map>
#include <shared_mutex>
#include <string>

#include <nlohmann/json.hpp>

#include "rls/reasoner.hpp"

namespace rls {

struct ServiceReply {
  int status = 200;
  nlohmann::json body;
};

/// Parses one edit object; throws Error or MalformedSequence.
Edit edit_from_json(const nlohmann::json& j);

class Service {
 public:
  explicit Service(Theory theory = {}, ReasonerConfig config = {});

  /// Safe to call concurrently: readers share the theory, writers are
  /// exclusive.
  ServiceReply handle(const std::string& method, const std::string& path,
                      const std::string& body);

  Theory theory() const;

 private:
  ServiceReply dispatch(const std::string& method, const std::string& path,
                        const nlohmann::json& body);
  nlohmann::json theory_view() const;

  mutable std::shared_mutex mutex_;
  Theory theory_;
  std::map<std::string, std::string> sentences_;  // sentence id -> text
  ReasonerConfig config_;
};

}  // namespace rls
