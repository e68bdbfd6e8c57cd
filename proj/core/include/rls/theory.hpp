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

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rls/literal.hpp"

namespace rls {

/// l_1 ∧ ... ∧ l_n → consequent, with at most one variable token shared by
/// all occurrences.
struct Rule {
  std::string id;
  std::vector<Literal> antecedents;
  Literal consequent;

  friend bool operator==(const Rule&, const Rule&) = default;
};

struct Fact {
  std::string id;
  Literal literal;

  friend bool operator==(const Fact&, const Fact&) = default;
};

/// Throws Error(InvalidRule) when the rule has no antecedents, uses two
/// different variable tokens, or has a variable consequent that no
/// antecedent binds.
void validate_rule(const Rule& r, const VariableSet& vars = VariableSet());

/// The variable token used by `r`, if any.
std::optional<std::string> rule_variable(const Rule& r,
                                         const VariableSet& vars = VariableSet());

/// Facts, rules and the originating sentence of each item. Immutable once
/// constructed; the constructor enforces id uniqueness, ground facts and
/// the rule invariants.
class Theory {
 public:
  Theory() = default;
  Theory(std::vector<Fact> facts, std::vector<Rule> rules,
         std::map<std::string, std::string> provenance = {},
         VariableSet variables = VariableSet());

  const std::vector<Fact>& facts() const noexcept { return facts_; }
  const std::vector<Rule>& rules() const noexcept { return rules_; }
  const std::map<std::string, std::string>& provenance() const noexcept {
    return provenance_;
  }
  const VariableSet& variables() const noexcept { return variables_; }

  const Fact* find_fact(std::string_view id) const;
  const Rule* find_rule(std::string_view id) const;
  std::optional<std::string> source_of(std::string_view id) const;

  friend bool operator==(const Theory&, const Theory&) = default;

 private:
  std::vector<Fact> facts_;
  std::vector<Rule> rules_;
  std::map<std::string, std::string> provenance_;
  VariableSet variables_;
};

/// Grounding domain: every non-variable term in an `a` slot, or in the `b`
/// slot of a relation literal, across facts and rules. Properties (the `b`
/// of attribute literals) are never entities.
std::set<Term> entities(const Theory& t);

/// Substitutes `entity` for the rule's variable in every term position.
/// Throws Error(NoVariable) on a ground rule and Error(InvalidArgument) when
/// `entity` is itself a variable token.
Rule ground(const Rule& r, const Term& entity,
            const VariableSet& vars = VariableSet());

/// Propositionalizes the rule set: ground rules as-is, variable rules once
/// per entity in lexicographic order. Grounded copies keep the rule id.
std::vector<Rule> ground_all(const Theory& t);

/// A grounded rule together with the entity bound to its variable.
struct RuleInstance {
  Rule rule;
  std::optional<Term> binding;
};

/// ground_all over an explicit entity domain, keeping the bindings.
std::vector<RuleInstance> ground_instances(const Theory& t,
                                           const std::set<Term>& domain);

}  // namespace rls
