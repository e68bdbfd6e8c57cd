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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rls/literal.hpp"

namespace rls {

/// Evidence that `matched` was accepted in place of `needed`.
struct UnificationRecord {
  Literal needed;
  Literal matched;
  double score = 1.0;
  std::string op;

  friend bool operator==(const UnificationRecord&, const UnificationRecord&) = default;
};

enum class UnifierKind { Exact, Normalized, TokenContainment };

struct UnifierChoice {
  UnifierKind kind = UnifierKind::Exact;
  double threshold = 0.5;  // TokenContainment only

  static UnifierChoice exact() { return {}; }
  static UnifierChoice normalized() { return {UnifierKind::Normalized, 0.5}; }
  /// Throws Error(InvalidThreshold) unless 0 < threshold <= 1.
  static UnifierChoice token(double threshold = 0.5);

  /// "exact" | "normalized" | "token" | "token:<threshold>".
  static UnifierChoice parse(std::string_view spec);
  std::string to_string() const;

  friend bool operator==(const UnifierChoice&, const UnifierChoice&) = default;
};

/// Operator names as they appear in records.
inline constexpr std::string_view kExactOp = "exact";
inline constexpr std::string_view kNormalizedOp = "normalized";
inline constexpr std::string_view kTokenOp = "token";

/// Lowercased, single-spaced, leading article (a/an/the) removed.
std::string normalize_for_matching(const Term& t);

std::optional<UnificationRecord> unify_exact(const Literal& needed,
                                             const Literal& candidate);
std::optional<UnificationRecord> unify_normalized(const Literal& needed,
                                                  const Literal& candidate);
/// Share of the needed literal's (pred ∪ b) tokens found in the candidate's.
/// Subjects must agree under normalization and polarities must match.
std::optional<UnificationRecord> unify_token_containment(const Literal& needed,
                                                         const Literal& candidate,
                                                         double threshold);

std::optional<UnificationRecord> unify(const Literal& needed, const Literal& candidate,
                                       const UnifierChoice& choice);

/// Highest-scoring acceptable candidate. At equal score an exact match wins,
/// then the lexicographically smallest candidate.
std::optional<UnificationRecord> best_match(const Literal& needed,
                                            std::span<const Literal> atoms,
                                            const UnifierChoice& choice);

}  // namespace rls
