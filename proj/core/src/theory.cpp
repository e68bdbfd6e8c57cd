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

#include "rls/theory.hpp"

#include <algorithm>

#include "rls/errors.hpp"

namespace rls {
namespace {

void collect_variables(const Literal& l, const VariableSet& vars,
                       std::set<std::string>& out) {
  for (const Term* t : {&l.a, &l.pred, &l.b}) {
    if (vars.contains(*t)) out.insert(t->text());
  }
}

bool mentions(const Literal& l, const std::string& token) {
  return l.a.text() == token || l.pred.text() == token || l.b.text() == token;
}

Term substitute(const Term& t, const std::string& variable, const Term& entity) {
  return t.text() == variable ? entity : t;
}

Literal substitute(const Literal& l, const std::string& variable,
                   const Term& entity) {
  return {l.kind, substitute(l.a, variable, entity),
          substitute(l.pred, variable, entity),
          substitute(l.b, variable, entity), l.polarity};
}

}  // namespace

void validate_rule(const Rule& r, const VariableSet& vars) {
  if (r.id.empty()) throw Error(ErrorCode::InvalidRule, "rule without id");
  if (r.antecedents.empty()) {
    throw Error(ErrorCode::InvalidRule, "rule " + r.id + " has no antecedents");
  }
  std::set<std::string> seen;
  for (const auto& l : r.antecedents) collect_variables(l, vars, seen);
  collect_variables(r.consequent, vars, seen);
  if (seen.size() > 1) {
    throw Error(ErrorCode::InvalidRule,
                "rule " + r.id + " uses more than one variable token");
  }
  if (seen.size() == 1) {
    const auto& v = *seen.begin();
    bool bound = std::any_of(r.antecedents.begin(), r.antecedents.end(),
                             [&](const Literal& l) { return mentions(l, v); });
    if (mentions(r.consequent, v) && !bound) {
      throw Error(ErrorCode::InvalidRule,
                  "rule " + r.id + " has an unbound variable in its consequent");
    }
  }
}

std::optional<std::string> rule_variable(const Rule& r, const VariableSet& vars) {
  std::set<std::string> seen;
  for (const auto& l : r.antecedents) collect_variables(l, vars, seen);
  collect_variables(r.consequent, vars, seen);
  if (seen.empty()) return std::nullopt;
  return *seen.begin();
}

Theory::Theory(std::vector<Fact> facts, std::vector<Rule> rules,
               std::map<std::string, std::string> provenance,
               VariableSet variables)
    : facts_(std::move(facts)),
      rules_(std::move(rules)),
      provenance_(std::move(provenance)),
      variables_(std::move(variables)) {
  std::set<std::string> ids;
  for (const auto& f : facts_) {
    if (f.id.empty()) throw Error(ErrorCode::InvalidTheory, "fact without id");
    if (!ids.insert(f.id).second) {
      throw Error(ErrorCode::DuplicateId, "duplicate id " + f.id);
    }
    if (!is_ground(f.literal, variables_)) {
      throw Error(ErrorCode::InvalidTheory,
                  "fact " + f.id + " is not ground: " + to_string(f.literal));
    }
  }
  for (const auto& r : rules_) {
    if (!ids.insert(r.id).second) {
      throw Error(ErrorCode::DuplicateId, "duplicate id " + r.id);
    }
    validate_rule(r, variables_);
  }
  for (const auto& [id, source] : provenance_) {
    if (!ids.count(id)) {
      throw Error(ErrorCode::UnknownId, "provenance for unknown id " + id);
    }
  }
}

const Fact* Theory::find_fact(std::string_view id) const {
  auto it = std::find_if(facts_.begin(), facts_.end(),
                         [&](const Fact& f) { return f.id == id; });
  return it == facts_.end() ? nullptr : &*it;
}

const Rule* Theory::find_rule(std::string_view id) const {
  auto it = std::find_if(rules_.begin(), rules_.end(),
                         [&](const Rule& r) { return r.id == id; });
  return it == rules_.end() ? nullptr : &*it;
}

std::optional<std::string> Theory::source_of(std::string_view id) const {
  auto it = provenance_.find(std::string(id));
  if (it == provenance_.end()) return std::nullopt;
  return it->second;
}

std::set<Term> entities(const Theory& t) {
  std::set<Term> out;
  const auto& vars = t.variables();
  auto add = [&](const Literal& l) {
    if (!vars.contains(l.a)) out.insert(l.a);
    if (l.kind == LiteralKind::Relation && !vars.contains(l.b)) out.insert(l.b);
  };
  for (const auto& f : t.facts()) add(f.literal);
  for (const auto& r : t.rules()) {
    for (const auto& l : r.antecedents) add(l);
    add(r.consequent);
  }
  return out;
}

Rule ground(const Rule& r, const Term& entity, const VariableSet& vars) {
  if (vars.contains(entity)) {
    throw Error(ErrorCode::InvalidArgument,
                "cannot ground with variable token " + entity.text());
  }
  auto variable = rule_variable(r, vars);
  if (!variable) throw Error(ErrorCode::NoVariable, "rule " + r.id + " is ground");
  Rule out{r.id, {}, substitute(r.consequent, *variable, entity)};
  out.antecedents.reserve(r.antecedents.size());
  for (const auto& l : r.antecedents) {
    out.antecedents.push_back(substitute(l, *variable, entity));
  }
  return out;
}

std::vector<RuleInstance> ground_instances(const Theory& t,
                                           const std::set<Term>& domain) {
  std::vector<RuleInstance> out;
  for (const auto& r : t.rules()) {
    if (!rule_variable(r, t.variables())) {
      out.push_back({r, std::nullopt});
      continue;
    }
    for (const auto& e : domain) {
      if (t.variables().contains(e)) continue;
      out.push_back({ground(r, e, t.variables()), e});
    }
  }
  return out;
}

std::vector<Rule> ground_all(const Theory& t) {
  std::vector<Rule> out;
  for (auto& inst : ground_instances(t, entities(t))) {
    out.push_back(std::move(inst.rule));
  }
  return out;
}

}  // namespace rls
