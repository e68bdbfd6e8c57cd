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

#include "rls/oracle.hpp"

#include <set>
#include <vector>

namespace rls::oracle {
namespace {

struct GroundClause {
  std::vector<Literal> body;
  Literal head;
};

Literal replace_var(const Literal& l, const std::string& var, const Term& e) {
  auto sub = [&](const Term& t) { return t.text() == var ? e : t; };
  return {l.kind, sub(l.a), sub(l.pred), sub(l.b), l.polarity};
}

std::vector<GroundClause> propositionalize(const Theory& t) {
  const auto& vars = t.variables();
  std::set<Term> domain;
  auto note = [&](const Literal& l) {
    if (!vars.contains(l.a)) domain.insert(l.a);
    if (l.kind == LiteralKind::Relation && !vars.contains(l.b)) domain.insert(l.b);
  };
  for (const auto& f : t.facts()) note(f.literal);
  for (const auto& r : t.rules()) {
    for (const auto& l : r.antecedents) note(l);
    note(r.consequent);
  }

  std::vector<GroundClause> out;
  for (const auto& r : t.rules()) {
    std::string var;
    auto scan = [&](const Literal& l) {
      for (const Term* x : {&l.a, &l.pred, &l.b}) {
        if (vars.contains(*x)) var = x->text();
      }
    };
    for (const auto& l : r.antecedents) scan(l);
    scan(r.consequent);
    if (var.empty()) {
      out.push_back({r.antecedents, r.consequent});
      continue;
    }
    for (const auto& e : domain) {
      GroundClause g{{}, replace_var(r.consequent, var, e)};
      for (const auto& l : r.antecedents) g.body.push_back(replace_var(l, var, e));
      out.push_back(std::move(g));
    }
  }
  return out;
}

Literal flipped(const Literal& l) {
  return {l.kind, l.a, l.pred, l.b,
          l.positive() ? Polarity::Negative : Polarity::Positive};
}

// Least model of the program where "not p" is read against the fixed set
// `assumed` (the Gelfond-Lifschitz style reduct), by plain rounds. Returns
// atom -> round of first appearance.
std::map<Literal, int> least_model(const std::vector<Fact>& facts,
                                   const std::vector<GroundClause>& clauses,
                                   const std::set<Literal>& assumed) {
  std::map<Literal, int> model;
  for (const auto& f : facts) model.emplace(f.literal, 0);
  for (int round = 1;; ++round) {
    std::vector<Literal> fresh;
    for (const auto& c : clauses) {
      if (model.count(c.head)) continue;
      bool ok = true;
      for (const auto& l : c.body) {
        if (l.positive()) {
          ok = model.count(l) > 0;
        } else {
          ok = model.count(l) > 0 || assumed.count(flipped(l)) == 0;
        }
        if (!ok) break;
      }
      if (ok) fresh.push_back(c.head);
    }
    if (fresh.empty()) break;
    for (const auto& h : fresh) model.emplace(h, round);
  }
  return model;
}

std::set<Literal> keys(const std::map<Literal, int>& m) {
  std::set<Literal> out;
  for (const auto& [l, d] : m) out.insert(l);
  return out;
}

}  // namespace

bool NaiveModel::truth(const Literal& l) const {
  if (l.positive()) return atoms.count(l) > 0;
  return atoms.count(l) > 0 || atoms.count(flipped(l)) == 0;
}

std::optional<int> NaiveModel::depth(const Literal& l) const {
  if (l.positive()) {
    auto it = atoms.find(l);
    if (it == atoms.end()) return std::nullopt;
    return it->second;
  }
  if (!atoms.count(flipped(l))) return 0;
  auto it = atoms.find(l);
  if (it == atoms.end()) return std::nullopt;
  return it->second;
}

NaiveModel naive_closure(const Theory& t) {
  auto clauses = propositionalize(t);
  const auto& facts = t.facts();

  // Alternating fixpoint: `under` grows towards the true atoms, `over`
  // shrinks towards the possibly-true ones.
  std::set<Literal> under;
  std::set<Literal> over = keys(least_model(facts, clauses, under));
  for (;;) {
    std::set<Literal> next_under = keys(least_model(facts, clauses, over));
    std::set<Literal> next_over = keys(least_model(facts, clauses, next_under));
    if (next_under == under && next_over == over) break;
    under = std::move(next_under);
    over = std::move(next_over);
  }
  NaiveModel m;
  m.total = under == over;
  m.atoms = least_model(facts, clauses, under);
  return m;
}

}  // namespace rls::oracle
