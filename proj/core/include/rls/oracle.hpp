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

// Reference semantics by naive iteration, kept apart from the engine in
// reasoner.cpp: it grounds rules itself, re-applies every rule every round,
// and handles negation with the alternating fixpoint instead of
// stratification. Exact matching only. Used to label generated data and as
// the test oracle.

#pragma once

#include <map>
#include <optional>

#include "rls/theory.hpp"

namespace rls::oracle {

struct NaiveModel {
  /// Every atom (either polarity) that holds, with the round it first
  /// appeared in during the final pass.
  std::map<Literal, int> atoms;
  /// False when the alternating fixpoint leaves atoms undefined, i.e. the
  /// theory has no two-valued stratified reading.
  bool total = true;

  /// Closed-world truth of a ground literal.
  bool truth(const Literal& l) const;
  /// Depth of the minimal proof of `l` under closed-world reading: the round
  /// of a present atom, 0 for negation as failure.
  std::optional<int> depth(const Literal& l) const;
};

NaiveModel naive_closure(const Theory& t);

}  // namespace rls::oracle
