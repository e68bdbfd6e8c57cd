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

// Closed-world forward chaining over propositionalized theories.
//
// Explicit negative literals are atoms in their own right. A negative
// antecedent holds when its explicit form is present or, by negation as
// failure, when nothing matches its positive counterpart. Ground atoms are
// stratified so that negation only consults fully computed lower strata.

#pragma once

#include <limits>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "rls/proof.hpp"
#include "rls/theory.hpp"
#include "rls/unify.hpp"

namespace rls {

enum class NonStratifiedPolicy { Error, BestEffort };

struct ReasonerConfig {
  static constexpr int kUnlimited = std::numeric_limits<int>::max();

  /// Atoms whose minimal proof is deeper than this are treated as not
  /// derivable and listed in ClosureResult::truncated.
  int max_depth = kUnlimited;
  UnifierChoice unifier;
  NonStratifiedPolicy nonstratified_policy = NonStratifiedPolicy::Error;
};

/// How one antecedent of a chosen rule instance was discharged.
struct Premise {
  Literal needed;
  /// Atom used; empty when discharged by negation as failure.
  std::optional<Literal> matched;
  /// Set when `matched` differs from `needed`.
  std::optional<UnificationRecord> unification;
};

/// Minimal-depth justification of a present atom.
struct Justification {
  int depth = 0;
  std::string fact_id;  // nonempty when asserted
  std::string rule_id;
  std::optional<Term> binding;
  std::vector<Premise> premises;
};

struct ClosureResult {
  /// Positive atoms with their minimal derivation depth.
  std::map<Literal, int> derived;
  /// Negative atoms that are asserted or derived, with depth.
  std::map<Literal, int> explicit_negatives;
  /// (positive, negative) pairs over the same (a, pred, b).
  std::vector<std::pair<Literal, Literal>> contradictions;
  /// Non-identical matches used by the chosen justifications.
  std::vector<UnificationRecord> unifications_used;
  /// Atoms dropped because their minimal depth exceeds max_depth.
  std::vector<Literal> truncated;
  /// Best-effort evaluation notes (negative cycles).
  std::vector<std::string> warnings;

  std::map<Literal, Justification> justifications;

  bool holds(const Literal& l) const;
};

/// Throws Error(NotStratified) on a negative dependency cycle unless the
/// policy is BestEffort.
ClosureResult closure(const Theory& t, const ReasonerConfig& cfg = {});

struct Answer {
  bool truth = false;
  ProofTree proof;
  /// Set when the query was matched to a different atom by the unifier.
  std::optional<UnificationRecord> query_unification;
  /// The query atom needed a proof deeper than max_depth.
  bool truncated = false;
};

Answer answer(const Theory& t, const Literal& query, const ReasonerConfig& cfg = {});
Answer answer(const Theory& t, const ClosureResult& c, const Literal& query,
              const ReasonerConfig& cfg = {});

/// Builds the proof tree of a present atom from the recorded justifications.
ProofTree build_proof(const ClosureResult& c, const Literal& atom);

struct Implication {
  Literal literal;
  int depth = 0;
  friend bool operator==(const Implication&, const Implication&) = default;
};

/// Derived atoms that are not asserted facts, ordered by (depth, literal).
std::vector<Implication> enumerate_implications(const Theory& t,
                                                const ReasonerConfig& cfg = {});

/// Minimal sets of new facts (each at most `max_set_size` literals) that make
/// `query` provable, ordered by (size, literals). Candidates are the
/// positive ground antecedents that are not already derivable. Throws
/// Error(AlreadyProvable) when the query already holds.
std::vector<std::vector<Literal>> abduce(const Theory& t, const Literal& query,
                                         std::size_t max_set_size,
                                         const ReasonerConfig& cfg = {});

std::vector<std::pair<Literal, Literal>> detect_contradictions(
    const Theory& t, const ReasonerConfig& cfg = {});

// Theory edits.

struct AddFact {
  Fact fact;
  std::optional<std::string> source;
};
struct RemoveFact {
  std::string id;
};
struct ReplaceFact {
  std::string id;
  Literal literal;
};
struct AddRule {
  Rule rule;
  std::optional<std::string> source;
};
struct RemoveRule {
  std::string id;
};
struct ReplaceRule {
  std::string id;
  std::vector<Literal> antecedents;
  Literal consequent;
};

using Edit = std::variant<AddFact, RemoveFact, ReplaceFact, AddRule, RemoveRule, ReplaceRule>;

/// Applies edits in order. Replacements keep position and provenance.
/// Throws Error(UnknownId) for missing ids and Error(DuplicateId) for clashes.
Theory apply_edits(const Theory& t, const std::vector<Edit>& edits);

struct Delta {
  std::vector<Implication> added;
  std::vector<Implication> removed;
};

Delta implication_delta(const std::vector<Implication>& before,
                        const std::vector<Implication>& after);

struct WhatIfResult {
  Answer answer;
  Delta delta;
};

/// answer(apply_edits(t, edits), query) plus the change in implications.
WhatIfResult what_if(const Theory& t, const std::vector<Edit>& edits,
                     const Literal& query, const ReasonerConfig& cfg = {});

}  // namespace rls
