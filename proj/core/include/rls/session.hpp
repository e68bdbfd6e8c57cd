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

// Line-oriented rectification session.
//
//   show                          facts and rules with their source sentence
//   ask <query>                   truth value and proof
//   proof                         proof of the last answer
//   edit <id> <formula>           replace a fact literal or a rule
//   add <id> [source=<s>] <formula>
//   drop <id>
//   whatif <edit>; <edit> ? <query>
//   implications | contradictions | abduce <query>
//   save <path> | help | quit
//
// Formulas and queries use the sequence encoding.

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rls/reasoner.hpp"

namespace rls {

/// Parses one "edit|add|drop ..." command against `t` (ids decide between
/// fact and rule edits). Throws Error or MalformedSequence.
Edit parse_edit_command(const Theory& t, std::string_view command);

/// "(a, pred, b, +)" lines of a delta, "+ " for added and "- " for removed.
std::string render_delta(const Delta& d);

class Session {
 public:
  explicit Session(Theory theory, ReasonerConfig config = {});

  struct Reply {
    std::string text;
    bool ok = true;
    bool quit = false;
  };

  /// Runs one command. Errors are reported in the reply; the theory only
  /// changes when a command succeeds.
  Reply execute(std::string_view line);

  const Theory& theory() const noexcept { return theory_; }

 private:
  Reply run(const std::string& verb, const std::string& rest);

  Theory theory_;
  ReasonerConfig config_;
  std::optional<Answer> last_;
};

/// Reads commands until EOF or quit, writing replies and a "> " prompt.
void run_repl(Session& session, std::istream& in, std::ostream& out, bool prompt = true);

}  // namespace rls
