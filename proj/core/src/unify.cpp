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

#include "rls/unify.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

#include "rls/errors.hpp"

namespace rls {
namespace {

std::set<std::string> tokens_of(const Literal& l) {
  std::set<std::string> out;
  for (const Term* t : {&l.pred, &l.b}) {
    std::istringstream words(normalize_for_matching(*t));
    std::string w;
    while (words >> w) out.insert(w);
  }
  return out;
}

UnificationRecord make_record(const Literal& needed, const Literal& candidate,
                              double score, std::string_view op) {
  return {needed, candidate, score, std::string(needed == candidate ? kExactOp : op)};
}

}  // namespace

UnifierChoice UnifierChoice::token(double threshold) {
  if (!(threshold > 0.0 && threshold <= 1.0)) {
    throw Error(ErrorCode::InvalidThreshold,
                "token threshold must lie in (0, 1], got " + std::to_string(threshold));
  }
  return {UnifierKind::TokenContainment, threshold};
}

UnifierChoice UnifierChoice::parse(std::string_view spec) {
  if (spec == "exact") return exact();
  if (spec == "normalized") return normalized();
  if (spec == "token") return token();
  if (spec.starts_with("token:")) {
    auto number = std::string(spec.substr(6));
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(number, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != number.size()) {
      throw Error(ErrorCode::InvalidThreshold, "bad threshold '" + number + "'");
    }
    return token(value);
  }
  throw Error(ErrorCode::InvalidArgument,
              "unknown unifier '" + std::string(spec) +
                  "' (expected exact, normalized or token:<threshold>)");
}

std::string UnifierChoice::to_string() const {
  switch (kind) {
    case UnifierKind::Exact: return "exact";
    case UnifierKind::Normalized: return "normalized";
    case UnifierKind::TokenContainment: {
      std::ostringstream os;
      os << "token:" << threshold;
      return os.str();
    }
  }
  return "exact";
}

std::string normalize_for_matching(const Term& t) {
  std::string lowered;
  lowered.reserve(t.text().size());
  for (char c : t.text()) {
    lowered.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  lowered = collapse_whitespace(lowered);
  for (std::string_view article : {"a ", "an ", "the "}) {
    if (lowered.size() > article.size() && lowered.starts_with(article)) {
      return lowered.substr(article.size());
    }
  }
  return lowered;
}

std::optional<UnificationRecord> unify_exact(const Literal& needed,
                                             const Literal& candidate) {
  if (needed != candidate) return std::nullopt;
  return make_record(needed, candidate, 1.0, kExactOp);
}

std::optional<UnificationRecord> unify_normalized(const Literal& needed,
                                                  const Literal& candidate) {
  if (needed == candidate) return make_record(needed, candidate, 1.0, kExactOp);
  if (needed.polarity != candidate.polarity) return std::nullopt;
  for (auto slot : {&Literal::a, &Literal::pred, &Literal::b}) {
    if (normalize_for_matching(needed.*slot) != normalize_for_matching(candidate.*slot)) {
      return std::nullopt;
    }
  }
  return make_record(needed, candidate, 1.0, kNormalizedOp);
}

std::optional<UnificationRecord> unify_token_containment(const Literal& needed,
                                                         const Literal& candidate,
                                                         double threshold) {
  if (!(threshold > 0.0 && threshold <= 1.0)) {
    throw Error(ErrorCode::InvalidThreshold,
                "token threshold must lie in (0, 1], got " + std::to_string(threshold));
  }
  if (needed == candidate) return make_record(needed, candidate, 1.0, kExactOp);
  if (needed.polarity != candidate.polarity) return std::nullopt;
  if (normalize_for_matching(needed.a) != normalize_for_matching(candidate.a)) {
    return std::nullopt;
  }
  auto want = tokens_of(needed);
  auto have = tokens_of(candidate);
  if (want.empty()) return std::nullopt;
  std::size_t shared = 0;
  for (const auto& w : want) shared += have.count(w);
  double score = static_cast<double>(shared) / static_cast<double>(want.size());
  if (score < threshold) return std::nullopt;
  return make_record(needed, candidate, score, kTokenOp);
}

std::optional<UnificationRecord> unify(const Literal& needed, const Literal& candidate,
                                       const UnifierChoice& choice) {
  switch (choice.kind) {
    case UnifierKind::Exact: return unify_exact(needed, candidate);
    case UnifierKind::Normalized: return unify_normalized(needed, candidate);
    case UnifierKind::TokenContainment:
      return unify_token_containment(needed, candidate, choice.threshold);
  }
  return std::nullopt;
}

std::optional<UnificationRecord> best_match(const Literal& needed,
                                            std::span<const Literal> atoms,
                                            const UnifierChoice& choice) {
  std::optional<UnificationRecord> best;
  for (const auto& candidate : atoms) {
    auto rec = unify(needed, candidate, choice);
    if (!rec) continue;
    if (!best) {
      best = std::move(rec);
      continue;
    }
    bool rec_exact = rec->matched == needed;
    bool best_exact = best->matched == needed;
    bool better = rec->score > best->score ||
                  (rec->score == best->score &&
                   (rec_exact > best_exact ||
                    (rec_exact == best_exact && rec->matched < best->matched)));
    if (better) best = std::move(rec);
  }
  return best;
}

}  // namespace rls
