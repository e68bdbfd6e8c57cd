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

// Synthetic theories in the templated rule-reasoning style: English
// sentences the shipped grammar can read, the gold theory behind them, and
// queries labeled by the naive oracle.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rls/ingest.hpp"
#include "rls/theory.hpp"

namespace rls {

struct GenParams {
  int entities = 4;
  int properties = 8;
  int rules = 6;
  int facts = 6;
  /// Length of the guaranteed rule chain; some query reaches this depth.
  int max_depth = 3;
  double negation_probability = 0.2;
  /// Share of rule and fact literals that are relations ("chases the dog").
  double relation_probability = 0.25;
  std::uint64_t seed = 1;

  /// Throws Error(InvalidArgument) when a count is out of range.
  void validate() const;
};

struct GenQuery {
  SentenceRecord sentence;  // role Query, gold set
  Literal literal;
  bool label = false;
  int depth = 0;
};

struct GeneratedTheory {
  std::vector<SentenceRecord> sentences;  // facts and rules, gold set
  Theory theory;
  /// Every attribute and relation query over the vocabulary, both
  /// polarities, ordered by (depth, literal).
  std::vector<GenQuery> queries;
};

/// Deterministic per params. Sentence ids are "<prefix>s<k>", query ids
/// "<prefix>q<k>". Throws Error(GenerationFailed) when no attempt reaches
/// the target depth.
GeneratedTheory generate_theory(const GenParams& p, const std::string& id_prefix = "");

/// One theory with one chosen query.
struct QAInstance {
  std::string id;
  std::vector<SentenceRecord> sentences;
  SentenceRecord query;
  bool label = false;
  int depth = 0;
};

/// `count` instances whose query has oracle depth exactly `depth`, labels
/// alternating true/false where the theory allows. Instance i uses seed
/// mix(base.seed, depth, i) and ids "d<depth>.<i>.".
std::vector<QAInstance> generate_instances(const GenParams& base, int depth, int count);

/// Clamps base.max_depth up to `depth` and returns the instance plus its
/// gold theory.
struct InstanceWithTheory {
  QAInstance instance;
  Theory theory;
  Literal query;
};
InstanceWithTheory generate_instance(const GenParams& base, int depth, int index);

}  // namespace rls
