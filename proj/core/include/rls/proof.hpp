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

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rls/literal.hpp"
#include "rls/unify.hpp"

namespace rls {

class Theory;

enum class ProofKind { Asserted, Rule, Naf };

struct ProofNode {
  ProofKind kind = ProofKind::Asserted;
  Literal literal;
  int depth = 0;
  std::string fact_id;            // Asserted
  std::string rule_id;            // Rule
  std::optional<Term> binding;    // Rule with a variable
  std::vector<ProofNode> children;
  std::vector<UnificationRecord> unifications;
  std::optional<Literal> naf_of;  // Naf: the atom that is not derivable

  friend bool operator==(const ProofNode&, const ProofNode&) = default;
};

struct ProofTree {
  ProofNode root;
  friend bool operator==(const ProofTree&, const ProofTree&) = default;
};

nlohmann::json to_json(const UnificationRecord& r);
nlohmann::json to_json(const ProofNode& n);
nlohmann::json to_json(const ProofTree& p);
ProofNode proof_node_from_json(const nlohmann::json& j);

/// One literal per line, children indented by two spaces:
///
///   (Harry, is, round, +)  [rule r1, binding Harry, depth 1]
///     (Harry, is, nice, +)  [fact f2]
std::string render_proof(const ProofTree& p);

/// Replays the tree against the theory: asserted leaves must be facts,
/// rule nodes must instantiate their rule with children matching the
/// antecedents, depths must be consistent. Returns a description of the
/// first problem, or nothing when the proof checks.
std::optional<std::string> check_proof(const Theory& t, const ProofTree& p);

}  // namespace rls
