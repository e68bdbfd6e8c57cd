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

#include "rls/oracle.hpp"
#include "rls/reasoner.hpp"
#include "support/expect_error.hpp"

namespace rls {
namespace {

Literal A(std::string_view s, std::string_view p, Polarity pol = Polarity::Positive) {
  return Literal::attr(s, "is", p, pol);
}
constexpr Polarity kNeg = Polarity::Negative;

Theory harry() {
  return Theory({{"f1", A("Harry", "young")}, {"f2", A("Harry", "nice")}},
                {{"r1", {A("someone", "nice")}, A("someone", "round")}});
}

Theory chain(int n) {
  std::vector<Rule> rules;
  for (int i = 0; i < n; ++i) {
    rules.push_back({"r" + std::to_string(i), {A("X", "a" + std::to_string(i))}, A("X", "a" + std::to_string(i + 1))});
  }
  return Theory({{"f", A("X", "a0")}}, rules);
}

TEST(Closure, DerivesRoundAtDepthOne) {
  auto c = closure(harry());
  ASSERT_TRUE(c.derived.count(A("Harry", "round")));
  EXPECT_EQ(c.derived.at(A("Harry", "round")), 1);
  EXPECT_EQ(c.derived.at(A("Harry", "nice")), 0);
  EXPECT_TRUE(c.explicit_negatives.empty());
  EXPECT_TRUE(c.unifications_used.empty());
}

TEST(Closure, EmptyTheory) {
  auto c = closure(Theory());
  EXPECT_TRUE(c.derived.empty());
  EXPECT_TRUE(c.explicit_negatives.empty());
}

TEST(Closure, FiftyStepChain) {
  auto c = closure(chain(50));
  ASSERT_TRUE(c.derived.count(A("X", "a50")));
  EXPECT_EQ(c.derived.at(A("X", "a50")), 50);
  EXPECT_EQ(oracle::naive_closure(chain(50)).atoms.at(A("X", "a50")), 50);
  auto a = answer(chain(50), A("X", "a50"));
  EXPECT_TRUE(a.truth);
  EXPECT_EQ(a.proof.root.depth, 50);
}

TEST(Closure, MaxDepthTruncates) {
  ReasonerConfig cfg;
  cfg.max_depth = 10;
  auto c = closure(chain(50), cfg);
  EXPECT_TRUE(c.derived.count(A("X", "a10")));
  EXPECT_FALSE(c.derived.count(A("X", "a11")));
  EXPECT_FALSE(c.truncated.empty());
  auto a = answer(chain(50), A("X", "a50"), cfg);
  EXPECT_FALSE(a.truth);
  EXPECT_TRUE(a.truncated);
}

TEST(Closure, NegationAsFailureAndExplicitNegatives) {
  // Big things that are not red are cold; Anne is explicitly not kind.
  Theory t({{"f1", A("Anne", "big")}, {"f2", A("Bob", "big")}, {"f3", A("Bob", "red")}, {"f4", A("Anne", "kind", kNeg)}},
           {{"r1", {A("something", "big"), A("something", "red", kNeg)}, A("something", "cold")},
            {"r2", {A("something", "kind", kNeg)}, A("something", "sad", kNeg)}});
  auto c = closure(t);
  EXPECT_TRUE(c.derived.count(A("Anne", "cold")));
  EXPECT_FALSE(c.derived.count(A("Bob", "cold")));
  EXPECT_TRUE(c.explicit_negatives.count(A("Anne", "sad", kNeg)));
  // Bob is not kind by failure, so r2 fires for him too.
  EXPECT_TRUE(c.explicit_negatives.count(A("Bob", "sad", kNeg)));
}

TEST(Closure, NegativeCycleIsNotStratified) {
  Theory t({{"f", A("A", "x")}}, {{"r1", {A("A", "p", kNeg)}, A("A", "q")}, {"r2", {A("A", "q", kNeg)}, A("A", "p")}});
  EXPECT_RLS_ERROR(closure(t), ErrorCode::NotStratified);
  ReasonerConfig cfg;
  cfg.nonstratified_policy = NonStratifiedPolicy::BestEffort;
  auto c = closure(t, cfg);
  EXPECT_FALSE(c.warnings.empty());
  EXPECT_FALSE(oracle::naive_closure(t).total);
}

TEST(Closure, PositiveCycleIsFine) {
  Theory t({{"f", A("A", "p")}}, {{"r1", {A("A", "p")}, A("A", "q")}, {"r2", {A("A", "q")}, A("A", "p")}});
  auto c = closure(t);
  EXPECT_EQ(c.derived.at(A("A", "p")), 0);
  EXPECT_EQ(c.derived.at(A("A", "q")), 1);
}

TEST(Answer, TrueWithDepthOneProof) {
  auto a = answer(harry(), A("Harry", "round"));
  EXPECT_TRUE(a.truth);
  EXPECT_EQ(a.proof.root.kind, ProofKind::Rule);
  EXPECT_EQ(a.proof.root.rule_id, "r1");
  EXPECT_EQ(a.proof.root.binding, Term("Harry"));
  EXPECT_EQ(a.proof.root.depth, 1);
  ASSERT_EQ(a.proof.root.children.size(), 1u);
  EXPECT_EQ(a.proof.root.children[0].fact_id, "f2");
  EXPECT_FALSE(check_proof(harry(), a.proof));
  EXPECT_EQ(render_proof(a.proof),
            "(Harry, is, round, +)  [rule r1, binding Harry, depth 1]\n"
            "  (Harry, is, nice, +)  [fact f2]\n");
}

TEST(Answer, UnmentionedAtomIsFalseByNaf) {
  auto a = answer(harry(), A("Harry", "green"));
  EXPECT_FALSE(a.truth);
  EXPECT_EQ(a.proof.root.kind, ProofKind::Naf);
  EXPECT_EQ(a.proof.root.naf_of, A("Harry", "green"));
}

TEST(Answer, NegatedUnmentionedAtomIsTrueByNaf) {
  auto a = answer(harry(), A("Harry", "green", kNeg));
  EXPECT_TRUE(a.truth);
  EXPECT_EQ(a.proof.root.kind, ProofKind::Naf);
  EXPECT_EQ(a.proof.root.depth, 0);
}

TEST(Answer, NegatedDerivableAtomIsFalse) {
  auto a = answer(harry(), A("Harry", "round", kNeg));
  EXPECT_FALSE(a.truth);
  EXPECT_EQ(a.proof.root.literal, A("Harry", "round"));
}

TEST(Answer, NonGroundQueryRejected) {
  EXPECT_RLS_ERROR(answer(harry(), A("someone", "round")), ErrorCode::InvalidLiteral);
}

TEST(Answer, ProofJsonRoundTrips) {
  auto a = answer(harry(), A("Harry", "round"));
  auto j = to_json(a.proof);
  EXPECT_EQ(j["kind"], "rule");
  EXPECT_EQ(j["depth"], 1);
  EXPECT_EQ(j["children"][0]["kind"], "asserted");
  EXPECT_EQ(proof_node_from_json(j), a.proof.root);
}

TEST(CheckProof, RejectsTamperedTrees) {
  auto a = answer(harry(), A("Harry", "round"));
  auto bad = a.proof;
  bad.root.children[0].fact_id = "f1";
  EXPECT_TRUE(check_proof(harry(), bad));
  bad = a.proof;
  bad.root.depth = 3;
  EXPECT_TRUE(check_proof(harry(), bad));
  bad = a.proof;
  bad.root.rule_id = "nope";
  EXPECT_TRUE(check_proof(harry(), bad));
  bad = a.proof;
  bad.root.children.clear();
  EXPECT_TRUE(check_proof(harry(), bad));
  ProofTree naf{answer(harry(), A("Harry", "green")).proof};
  EXPECT_FALSE(check_proof(harry(), naf));
  naf.root.naf_of = A("Harry", "red");
  EXPECT_TRUE(check_proof(harry(), naf));
}

TEST(Implications, HarryTheory) {
  auto imps = enumerate_implications(harry());
  ASSERT_EQ(imps.size(), 1u);
  EXPECT_EQ(imps[0], (Implication{A("Harry", "round"), 1}));
}

TEST(Implications, RuleFreeIsEmpty) {
  Theory t({{"f1", A("Harry", "young")}}, {});
  EXPECT_TRUE(enumerate_implications(t).empty());
}

TEST(Implications, TwoStepChain) {
  auto imps = enumerate_implications(chain(2));
  ASSERT_EQ(imps.size(), 2u);
  EXPECT_EQ(imps[0], (Implication{A("X", "a1"), 1}));
  EXPECT_EQ(imps[1], (Implication{A("X", "a2"), 2}));
}

TEST(Abduce, MissingNiceFact) {
  Theory t({{"f1", A("Harry", "young")}}, {{"r1", {A("someone", "nice")}, A("someone", "round")}});
  auto sets = abduce(t, A("Harry", "round"), 2);
  ASSERT_EQ(sets.size(), 1u);
  EXPECT_EQ(sets[0], std::vector<Literal>{A("Harry", "nice")});
}

TEST(Abduce, ProvableQueryRaises) {
  EXPECT_RLS_ERROR(abduce(harry(), A("Harry", "round"), 2), ErrorCode::AlreadyProvable);
}

TEST(Abduce, UnreachableGoalIsEmpty) {
  EXPECT_TRUE(abduce(harry(), A("Harry", "green"), 2).empty());
}

TEST(Abduce, ConjunctiveBodyNeedsPairs) {
  Theory t({{"f1", A("Bob", "young")}}, {{"r1", {A("someone", "big"), A("someone", "red")}, A("someone", "cold")},
                                         {"r2", {A("someone", "blue")}, A("someone", "cold")}});
  auto sets = abduce(t, A("Bob", "cold"), 2);
  std::vector<std::vector<Literal>> expected = {{A("Bob", "blue")}, {A("Bob", "big"), A("Bob", "red")}};
  EXPECT_EQ(sets, expected);
  EXPECT_EQ(abduce(t, A("Bob", "cold"), 1), std::vector<std::vector<Literal>>{{A("Bob", "blue")}});
}

TEST(Contradictions, DirectClash) {
  Theory t({{"f1", A("A", "kind")}, {"f2", A("A", "kind", kNeg)}}, {});
  auto cs = detect_contradictions(t);
  ASSERT_EQ(cs.size(), 1u);
  EXPECT_EQ(cs[0], std::make_pair(A("A", "kind"), A("A", "kind", kNeg)));
}

TEST(Contradictions, ConsistentTheory) { EXPECT_TRUE(detect_contradictions(harry()).empty()); }

TEST(Contradictions, ViaDerivation) {
  Theory t({{"f1", A("A", "nice")}, {"f2", A("A", "kind", kNeg)}}, {{"r1", {A("A", "nice")}, A("A", "kind")}});
  auto c = closure(t);
  ASSERT_EQ(c.contradictions.size(), 1u);
  EXPECT_EQ(c.derived.at(A("A", "kind")), 1);
}

TEST(WhatIf, NoEditsMatchesAnswer) {
  auto r = what_if(harry(), {}, A("Harry", "round"));
  auto a = answer(harry(), A("Harry", "round"));
  EXPECT_EQ(r.answer.truth, a.truth);
  EXPECT_EQ(r.answer.proof, a.proof);
  EXPECT_TRUE(r.delta.added.empty());
  EXPECT_TRUE(r.delta.removed.empty());
}

TEST(WhatIf, RemovingNiceRemovesRound) {
  auto r = what_if(harry(), {RemoveFact{"f2"}}, A("Harry", "round"));
  EXPECT_FALSE(r.answer.truth);
  EXPECT_TRUE(r.delta.added.empty());
  ASSERT_EQ(r.delta.removed.size(), 1u);
  EXPECT_EQ(r.delta.removed[0].literal, A("Harry", "round"));
}

TEST(WhatIf, ReplaceUnknownId) {
  EXPECT_RLS_ERROR(what_if(harry(), {ReplaceFact{"zz", A("Harry", "old")}}, A("Harry", "round")),
                   ErrorCode::UnknownId);
}

TEST(Edits, ReplaceKeepsPositionAndProvenance) {
  Theory t({{"f1", A("Harry", "young")}, {"f2", A("Harry", "nice")}}, {{"r1", {A("someone", "nice")}, A("someone", "round")}},
           {{"f1", "s1"}, {"f2", "s1"}, {"r1", "s2"}});
  auto t2 = apply_edits(t, {ReplaceFact{"f1", A("Harry", "old")}, ReplaceRule{"r1", {A("someone", "old")}, A("someone", "wise")}});
  EXPECT_EQ(t2.facts()[0], (Fact{"f1", A("Harry", "old")}));
  EXPECT_EQ(t2.source_of("f1"), "s1");
  EXPECT_EQ(t2.rules()[0].consequent, A("someone", "wise"));
  EXPECT_EQ(t2.source_of("r1"), "s2");
  EXPECT_RLS_ERROR(apply_edits(t, {AddFact{{"f1", A("Harry", "old")}, {}}}), ErrorCode::DuplicateId);
  EXPECT_RLS_ERROR(apply_edits(t, {RemoveRule{"f1"}}), ErrorCode::UnknownId);
  auto t3 = apply_edits(t, {RemoveFact{"f1"}, AddFact{{"f1", A("Harry", "young")}, "s1"}});
  EXPECT_EQ(t3.source_of("f1"), "s1");
}

TEST(WeakUnification, HeartOfGoldRecordInClosureAndProof) {
  Theory t({{"f1", A("Mary", "a young woman")}, {"f2", Literal::attr("Mary", "has", "heart of gold")}},
           {{"r1", {Literal::attr("someone", "has", "gold")}, A("someone", "rich")}});
  EXPECT_FALSE(answer(t, A("Mary", "rich")).truth);
  ReasonerConfig cfg;
  cfg.unifier = UnifierChoice::token(0.5);
  auto c = closure(t, cfg);
  UnificationRecord expected{Literal::attr("Mary", "has", "gold"), Literal::attr("Mary", "has", "heart of gold"), 1.0,
                             std::string(kTokenOp)};
  ASSERT_EQ(c.unifications_used.size(), 1u);
  EXPECT_EQ(c.unifications_used[0], expected);
  auto a = answer(t, c, A("Mary", "rich"), cfg);
  EXPECT_TRUE(a.truth);
  EXPECT_EQ(a.proof.root.unifications, std::vector<UnificationRecord>{expected});
  EXPECT_EQ(a.proof.root.children[0].literal, Literal::attr("Mary", "has", "heart of gold"));
  EXPECT_FALSE(check_proof(t, a.proof));
}

}  // namespace
}  // namespace rls
