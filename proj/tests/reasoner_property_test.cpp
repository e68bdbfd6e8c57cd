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

#include <gtest/gtest.h>

#include <functional>

#include "rls/oracle.hpp"
#include "rls/reasoner.hpp"
#include "rls/theory_json.hpp"
#include "support/random_theory.hpp"

namespace rls {
namespace {

using testing::RandomTheoryOptions;
using testing::TheoryFuzzer;

std::map<Literal, int> oracle_polarity(const oracle::NaiveModel& m, Polarity p) {
  std::map<Literal, int> out;
  for (const auto& [l, d] : m.atoms) {
    if (l.polarity == p) out.emplace(l, d);
  }
  return out;
}

// Ground literals worth asking about: everything mentioned by facts or
// grounded rules, in both polarities.
std::vector<Literal> probe_literals(const Theory& t) {
  std::set<Literal> out;
  for (const auto& f : t.facts()) out.insert(positive_form(f.literal));
  for (const auto& r : ground_all(t)) {
    for (const auto& l : r.antecedents) out.insert(positive_form(l));
    out.insert(positive_form(r.consequent));
  }
  std::vector<Literal> v;
  for (const auto& l : out) {
    v.push_back(l);
    v.push_back(negate(l));
  }
  return v;
}

void walk(const ProofNode& n, const std::function<void(const ProofNode&)>& f) {
  f(n);
  for (const auto& c : n.children) walk(c, f);
}

TEST(ReasonerProperty, MatchesOracleWithoutNegation) {
  TheoryFuzzer fz(101);
  for (int i = 0; i < 1000; ++i) {
    Theory t = fz.theory({});
    auto c = closure(t);
    auto m = oracle::naive_closure(t);
    ASSERT_EQ(c.derived, oracle_polarity(m, Polarity::Positive)) << to_json(t).dump();
    EXPECT_TRUE(c.explicit_negatives.empty());
  }
}

TEST(ReasonerProperty, MatchesOracleWithStratifiedNegation) {
  TheoryFuzzer fz(102);
  RandomTheoryOptions o;
  o.negation = true;
  for (int i = 0; i < 500; ++i) {
    Theory t = fz.theory(o);
    auto m = oracle::naive_closure(t);
    ASSERT_TRUE(m.total);
    auto c = closure(t);
    ASSERT_EQ(c.derived, oracle_polarity(m, Polarity::Positive)) << to_json(t).dump();
    ASSERT_EQ(c.explicit_negatives, oracle_polarity(m, Polarity::Negative)) << to_json(t).dump();
    for (const auto& q : probe_literals(t)) {
      EXPECT_EQ(answer(t, c, q).truth, m.truth(q)) << to_string(q);
    }
  }
}

TEST(ReasonerProperty, Monotone) {
  TheoryFuzzer fz(103);
  for (int i = 0; i < 300; ++i) {
    Theory small = fz.theory({});
    Theory extra = fz.theory({});
    auto facts = small.facts();
    auto rules = small.rules();
    for (auto f : extra.facts()) facts.push_back({"x" + f.id, f.literal});
    for (auto r : extra.rules()) rules.push_back({"x" + r.id, r.antecedents, r.consequent});
    auto before = closure(small).derived;
    auto after = closure(Theory(facts, rules)).derived;
    for (const auto& [l, d] : before) {
      ASSERT_TRUE(after.count(l)) << to_string(l);
      EXPECT_LE(after.at(l), d);
    }
  }
}

TEST(ReasonerProperty, OrderInvariant) {
  TheoryFuzzer fz(104);
  RandomTheoryOptions o;
  o.negation = true;
  for (int i = 0; i < 300; ++i) {
    Theory t = fz.theory(o);
    auto facts = t.facts();
    auto rules = t.rules();
    fz.shuffle(facts);
    fz.shuffle(rules);
    Theory p(facts, rules);
    auto c1 = closure(t);
    auto c2 = closure(p);
    ASSERT_EQ(c1.derived, c2.derived);
    ASSERT_EQ(c1.explicit_negatives, c2.explicit_negatives);
    for (const auto& q : probe_literals(t)) {
      auto a1 = answer(t, c1, q);
      auto a2 = answer(p, c2, q);
      EXPECT_EQ(a1.truth, a2.truth);
      EXPECT_EQ(a1.proof.root.depth, a2.proof.root.depth);
      EXPECT_EQ(a1.proof, a2.proof) << to_string(q);
    }
  }
}

TEST(ReasonerProperty, ProofsReplayAndDepthsAgree) {
  TheoryFuzzer fz(105);
  RandomTheoryOptions o;
  o.negation = true;
  for (int i = 0; i < 300; ++i) {
    Theory t = fz.theory(o);
    auto c = closure(t);
    for (const auto& q : probe_literals(t)) {
      auto a = answer(t, c, q);
      auto problem = check_proof(t, a.proof);
      ASSERT_FALSE(problem) << *problem << "\n" << render_proof(a.proof);
      walk(a.proof.root, [&](const ProofNode& n) {
        if (n.kind == ProofKind::Naf) {
          ASSERT_TRUE(n.naf_of);
          EXPECT_FALSE(c.derived.count(*n.naf_of));
          EXPECT_TRUE(n.children.empty());
        }
        if (n.kind == ProofKind::Asserted) EXPECT_EQ(n.depth, 0);
      });
      if (a.truth && q.positive()) EXPECT_EQ(a.proof.root.depth, c.derived.at(q));
      if (a.truth && !q.positive() && c.explicit_negatives.count(q)) {
        EXPECT_EQ(a.proof.root.depth, c.explicit_negatives.at(q));
      }
    }
    EXPECT_TRUE(c.unifications_used.empty());
  }
}

// Exhaustive oracle for abduction: every subset of at most two ground
// positive rule antecedents, checked by naive iteration.
std::vector<std::vector<Literal>> abduce_oracle(const Theory& t, const Literal& q) {
  std::set<Literal> pool;
  auto m = oracle::naive_closure(t);
  std::set<Term> domain = entities(t);
  domain.insert(q.a);
  if (q.kind == LiteralKind::Relation) domain.insert(q.b);
  for (const auto& r : t.rules()) {
    auto var = rule_variable(r);
    for (const auto& e : domain) {
      for (const auto& l : r.antecedents) {
        Literal g = l;
        if (var) {
          auto sub = [&](const Term& x) { return x.text() == *var ? e : x; };
          g = Literal{l.kind, sub(l.a), sub(l.pred), sub(l.b), l.polarity};
        }
        if (g.positive() && !m.atoms.count(g)) pool.insert(g);
      }
      if (!var) break;
    }
  }
  std::vector<Literal> cands(pool.begin(), pool.end());
  auto holds = [&](const std::vector<Literal>& extra) {
    auto facts = t.facts();
    for (std::size_t k = 0; k < extra.size(); ++k) facts.push_back({"oracle." + std::to_string(k), extra[k]});
    return oracle::naive_closure(Theory(facts, t.rules())).truth(q);
  };
  std::vector<std::vector<Literal>> out;
  for (const auto& x : cands) {
    if (holds({x})) out.push_back({x});
  }
  for (std::size_t i = 0; i < cands.size(); ++i) {
    for (std::size_t j = i + 1; j < cands.size(); ++j) {
      if (holds({cands[i]}) || holds({cands[j]})) continue;
      if (holds({cands[i], cands[j]})) out.push_back({cands[i], cands[j]});
    }
  }
  return out;
}

TEST(ReasonerProperty, AbductionMatchesExhaustiveSearch) {
  TheoryFuzzer fz(106);
  RandomTheoryOptions o;
  o.max_entities = 4;
  o.max_rules = 6;
  o.max_facts = 6;
  int checked = 0;
  for (int i = 0; i < 200 && checked < 60; ++i) {
    Theory t = fz.theory(o);
    auto c = closure(t);
    // Ask about a rule consequent that does not hold yet.
    std::optional<Literal> q;
    for (const auto& g : ground_all(t)) {
      if (g.consequent.positive() && !c.derived.count(g.consequent)) {
        q = g.consequent;
        break;
      }
    }
    if (!q) continue;
    ++checked;
    auto got = abduce(t, *q, 2);
    EXPECT_EQ(got, abduce_oracle(t, *q)) << to_json(t).dump() << " ? " << to_string(*q);
  }
  EXPECT_GE(checked, 30);
}

TEST(ReasonerProperty, WhatIfEqualsAnswerOnEditedTheory) {
  TheoryFuzzer fz(107);
  RandomTheoryOptions o;
  o.negation = true;
  for (int i = 0; i < 200; ++i) {
    Theory t = fz.theory(o);
    if (t.facts().empty()) continue;
    std::vector<Edit> edits = {RemoveFact{t.facts()[fz.below(static_cast<int>(t.facts().size()))].id},
                               AddFact{{"new", Literal::attr("Anne", "is", "big")}, {}}};
    Theory edited = apply_edits(t, edits);
    for (const auto& q : probe_literals(t)) {
      auto w = what_if(t, edits, q);
      auto a = answer(edited, q);
      ASSERT_EQ(w.answer.truth, a.truth);
      ASSERT_EQ(w.answer.proof, a.proof);
    }
    auto w = what_if(t, edits, Literal::attr("Anne", "is", "big"));
    auto delta = implication_delta(enumerate_implications(t), enumerate_implications(edited));
    EXPECT_EQ(w.delta.added, delta.added);
    EXPECT_EQ(w.delta.removed, delta.removed);
  }
}

}  // namespace
}  // namespace rls
