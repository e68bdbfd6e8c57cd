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

// JSON document form of theories:
//
//   {"facts": [{"id", "a", "pred", "b", "kind", "polarity", "source"?}],
//    "rules": [{"id", "antecedents": [...], "consequent": {...}, "source"?}],
//    "variables"?: ["someone", ...]}
//
// Polarity is "+"/"-", kind is "attr"/"rel". Facts and rules are written in
// id order so that equal theories serialize to identical bytes.

#pragma once

#include <nlohmann/json.hpp>

#include "rls/theory.hpp"

namespace rls {

nlohmann::json to_json(const Literal& l);
Literal literal_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Theory& t);
/// Throws Error(InvalidTheory) on schema violations; the Theory constructor
/// enforces the remaining invariants.
Theory theory_from_json(const nlohmann::json& j);

Theory load_theory_file(const std::string& path);
void save_theory_file(const Theory& t, const std::string& path);

}  // namespace rls
