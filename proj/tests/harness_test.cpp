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

#include <sstream>

#include "rls/eval.hpp"
#include "rls/generator.hpp"
#include "rls/oracle.hpp"
#include "support/expect_error.hpp"

namespace rls {
namespace {

std::string dump(const std::vector<SentenceRecord>& rs) {
  std::ostringstream os;
  write_sentences_jsonl(os, rs);
  return os.str();
}

TEST(Generator, DeterministicPerSeed) {
  GenParams p;
  p.seed = 1;
  auto a = generate_theory(p);
  auto b = generate_theory(p);
  EXPECT_EQ(dump(a.sentences), dump(b.sentences));
  EXPECT_EQ(a.theory, b.theory);
  ASSERT_EQ(a.queries.size(), b.queries.size());
  for (std::size_t i = 0; i < a.queries.size(); ++i) {
    EXPECT_EQ(a.queries[i].literal, b.queries[i].literal);
    EXPECT_EQ(a.queries[i].label, b.queries[i].label);
  }
  p.seed = 2;
  EXPECT_NE(dump(generate_theory(p).sentences), dump(a.sentences));
}

TEST(Generator, ReachesTargetDepth) {
  GenParams p;
  p.max_depth = 5;
  p.properties = 10;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    p.seed = seed;
    auto g = generate_theory(p);
    auto m = oracle::naive_closure(g.theory);
    bool found = false;
    for (const auto& q : g.queries) found |= q.depth == 5 && m.depth(q.literal) == 5;
    EXPECT_TRUE(found) << seed;
  }
}

TEST(Generator, NegationFreeIsMonotone) {
  GenParams p;
  p.negation_probability = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    p.seed = seed;
    auto g = generate_theory(p);
    for (const auto& f : g.theory.facts()) EXPECT_TRUE(f.literal.positive());
    for (const auto& r : g.theory.rules()) {
      for (const auto& l : r.antecedents) EXPECT_TRUE(l.positive());
      EXPECT_TRUE(r.consequent.positive());
    }
    // Dropping any fact never adds an atom.
    auto full = closure(g.theory).derived;
    auto smaller = apply_edits(g.theory, {RemoveFact{g.theory.facts().front().id}});
    for (const auto& [l, d] : closure(smaller).derived) EXPECT_TRUE(full.count(l));
  }
}

TEST(Generator, ValidatesParams) {
  GenParams p;
  p.entities = 0;
  EXPECT_RLS_ERROR(p.validate(), ErrorCode::InvalidArgument);
  p = {};
  p.negation_probability = 1.5;
  EXPECT_RLS_ERROR(generate_theory(p), ErrorCode::InvalidArgument);
}

TEST(GeneratorProperty, LabelsSentencesAndTemplatesAgree) {
  for (int depth = 0; depth <= 5; ++depth) {
    for (int i = 0; i < 20; ++i) {
      auto it = generate_instance({}, depth, i);
      const auto& inst = it.instance;
      EXPECT_EQ(inst.depth, depth);
      auto m = oracle::naive_closure(it.theory);
      EXPECT_EQ(m.truth(it.query), inst.label);
      EXPECT_EQ(theory_from_sentences(inst.sentences, FormulaSource::gold()), it.theory);
      for (const auto& s : inst.sentences) {
        ASSERT_TRUE(s.gold);
        EXPECT_EQ(encode(extract_templated(s.text)), *s.gold) << s.text;
      }
      EXPECT_EQ(encode(extract_templated(inst.query.text)), *inst.query.gold) << inst.query.text;
    }
  }
}

TEST(Generator, InstancesBalanceLabels) {
  auto insts = generate_instances({}, 3, 40);
  ASSERT_EQ(insts.size(), 40u);
  int yes = 0;
  for (const auto& x : insts) yes += x.label;
  EXPECT_GE(yes, 10);
  EXPECT_LE(yes, 30);
  EXPECT_EQ(insts[0].id, "d3.0");
  EXPECT_EQ(insts[0].sentences[0].id.rfind("d3.0.", 0), 0u);
}

TEST(EvalEm, PerfectAndMalformed) {
  std::map<std::string, Formula> golds;
  std::vector<PredictionRecord> recs;
  for (int i = 0; i < 10; ++i) {
    Formula f = Conjunction{{Literal::attr("P" + std::to_string(i), "is", "kind")}};
    golds.emplace("s" + std::to_string(i), f);
    recs.push_back({"s" + std::to_string(i), encode(f)});
  }
  auto perfect = eval_em(load_predictions(recs), golds);
  ASSERT_TRUE(perfect.em);
  EXPECT_EQ(perfect.em_accuracy(), 1.0);
  EXPECT_EQ(perfect.malformed_count, 0);

  recs[3].predicted = "<arg0> P3 <pred> is <arg1>";
  auto one_bad = eval_em(load_predictions(recs), golds);
  EXPECT_LE(*one_bad.em_accuracy(), 0.9);
  EXPECT_EQ(one_bad.malformed_count, 1);
  ASSERT_EQ(one_bad.failures.size(), 1u);
  EXPECT_EQ(one_bad.failures[0].id, "s3");

  recs.pop_back();
  EXPECT_RLS_ERROR(eval_em(load_predictions(recs), golds), ErrorCode::MissingPrediction);
}

TEST(EvalEm, ElidedPolarityStillMatches) {
  std::map<std::string, Formula> golds = {{"c", Conjunction{{Literal::rel("Sol", "son", "Kent")}}}};
  auto r = eval_em(load_predictions({{"c", "<arg1> Sol <pred> son <arg2> Kent <pos>"}}), golds);
  EXPECT_EQ(r.em_accuracy(), 1.0);
}

TEST(EvalAnswers, GoldSourceIsPerfect) {
  std::vector<QAInstance> ds;
  for (int d = 0; d <= 5; ++d) {
    auto part = generate_instances({}, d, 10);
    ds.insert(ds.end(), part.begin(), part.end());
  }
  EvalConfig cfg;
  cfg.workers = 2;
  auto r = eval_answers(ds, cfg);
  for (int d = 0; d <= 5; ++d) {
    EXPECT_EQ(r.per_depth.at(d).count, 10);
    EXPECT_EQ(r.per_depth.at(d).correct, 10);
  }
  EXPECT_EQ(r.overall().count, 60);
  EXPECT_TRUE(r.failures.empty());
}

TEST(EvalAnswers, UnbuildableTheoryCountsAsWrong) {
  auto ds = generate_instances({}, 1, 5);
  ds[2].sentences[0].gold.reset();
  ds[2].sentences[0].text = "To his chagrin, blorp zag.";
  EvalConfig cfg;
  cfg.source = FormulaSource::templates();
  auto r = eval_answers(ds, cfg);
  EXPECT_EQ(r.per_depth.at(1).count, 5);
  EXPECT_EQ(r.per_depth.at(1).correct, 4);
  ASSERT_EQ(r.failures.size(), 1u);
  EXPECT_EQ(r.failures[0].id, ds[2].id);
}

TEST(EvalAnswers, MalformedPredictionsCountedOnce) {
  auto ds = generate_instances({}, 2, 6);
  std::vector<PredictionRecord> preds;
  std::set<std::string> seen;
  for (const auto& inst : ds) {
    for (const auto& s : inst.sentences) {
      if (seen.insert(s.id).second) preds.push_back({s.id, *s.gold});
    }
    preds.push_back({inst.query.id, *inst.query.gold});
  }
  // Corrupt one sentence in each of the first three instances.
  std::set<std::string> corrupted;
  for (int k = 0; k < 3; ++k) corrupted.insert(ds[k].sentences[1].id);
  for (auto& p : preds) {
    if (corrupted.count(p.id)) p.predicted = p.predicted.substr(0, p.predicted.size() / 2) + " <and>";
  }
  auto map = load_predictions(preds);
  EvalConfig cfg;
  cfg.source = FormulaSource::from_predictions(map);
  auto r = eval_answers(ds, cfg);
  EXPECT_EQ(r.malformed_count, 3);
  EXPECT_EQ(r.per_depth.at(2).correct, 3);
  EXPECT_EQ(r.failures.size(), 3u);
}

TEST(Dataset, JsonlRoundTrip) {
  auto ds = generate_instances({}, 2, 3);
  std::stringstream ss;
  write_dataset_jsonl(ss, ds);
  auto back = read_dataset_jsonl(ss);
  ASSERT_EQ(back.size(), 3u);
  for (std::size_t i = 0; i < ds.size(); ++i) {
    EXPECT_EQ(to_json(back[i]), to_json(ds[i]));
  }
}

EvalReport sample_report() {
  EvalReport r;
  r.per_depth[0] = {120, 119};
  r.per_depth[1] = {80, 80};
  r.per_depth[3] = {7, 2};
  r.per_depth[7] = {3, 3};
  r.em = DepthStats{500, 497};
  r.malformed_count = 2;
  r.failures = {{"d0.1", "true", "false"}, {"d3.4", "false", "error: NoTemplateMatch: x"}};
  return r;
}

TEST(Report, MarkdownShape) {
  EvalReport r;
  r.per_depth[0] = {2, 2};
  r.per_depth[1] = {2, 1};
  std::string md = render_markdown(r);
  EXPECT_NE(md.find("| D | #qns | #correct | Accuracy |"), std::string::npos);
  EXPECT_NE(md.find("| 1 | 2 | 1 | 50.00 |"), std::string::npos);
  EXPECT_NE(md.find("| 5 | 0 | 0 | - |"), std::string::npos);
  EXPECT_NE(md.find("| All | 4 | 3 | 75.00 |"), std::string::npos);
}

TEST(Report, JsonAndMarkdownAreLossless) {
  auto r = sample_report();
  auto j = to_json(r);
  EXPECT_EQ(j["schema"], kReportSchema);
  EXPECT_EQ(report_from_json(j), r);
  EXPECT_EQ(report_from_markdown(render_markdown(report_from_json(j))), r);
  EXPECT_EQ(r.overall(), (DepthStats{210, 204}));
}

TEST(Report, RejectsUnknownSchema) {
  auto j = to_json(sample_report());
  j["schema"] = "rls.eval_report/v0";
  EXPECT_RLS_ERROR(report_from_json(j), ErrorCode::InvalidArgument);
}

}  // namespace
}  // namespace rls
