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

#include "rls/ingest.hpp"
#include "support/expect_error.hpp"

namespace rls {
namespace {

constexpr const char* kHarryEnc =
    "<arg0> Harry <pred> is <arg1> young <pos> <and> <arg0> Harry <pred> is <arg1> nice <pos>";
constexpr const char* kRuleEnc =
    "<arg0> someone <pred> is <arg1> nice <pos> <impl> <arg0> someone <pred> is <arg1> round <pos>";
constexpr const char* kSolEnc = "<arg1> Sol <pred> son <arg2> Kent <and> <arg1> Kent <pred> mother <arg2> Sol";
constexpr const char* kLotEnc = "<arg0> mustard <pred> capable of <arg1> shade from sun <neg>";

const std::map<std::string, Gender> kSolFemale = {{"Sol", Gender::Female}, {"Kent", Gender::Male}};

nlohmann::json mustard(const char* validity) {
  return {{"subject", "mustard"}, {"predicate", "/r/CapableOf"}, {"object", "shade from sun"}, {"validity", validity}};
}

TEST(RuleTaker, FactAnnotation) {
  EXPECT_EQ(encode(convert_ruletaker(R"(("Harry" "is" "young" "+")  ("Harry" "is" "nice" "+"))")), kHarryEnc);
}

TEST(RuleTaker, RuleAnnotation) {
  EXPECT_EQ(encode(convert_ruletaker(R"(("someone" "is" "nice" "+") -> ("someone" "is" "round" "+"))")), kRuleEnc);
}

TEST(RuleTaker, GroupedAntecedentsAndRelations) {
  auto f = convert_ruletaker(
      R"((("someone" "is" "big" "+") ("someone" "chases" "the cat" "-")) -> ("someone" "is" "red" "+"))");
  auto* r = std::get_if<RuleFormula>(&f);
  ASSERT_TRUE(r);
  ASSERT_EQ(r->antecedents.size(), 2u);
  EXPECT_EQ(r->antecedents[1], Literal::rel("someone", "chases", "the cat", Polarity::Negative));
}

TEST(RuleTaker, BadAnnotations) {
  EXPECT_RLS_ERROR(convert_ruletaker(R"(("Harry" "is" "young"))"), ErrorCode::BadAnnotation);
  EXPECT_RLS_ERROR(convert_ruletaker(R"(("Harry" "is" "young" "?"))"), ErrorCode::BadAnnotation);
  EXPECT_RLS_ERROR(convert_ruletaker(R"(("Harry" "is" "young" "+" "x"))"), ErrorCode::BadAnnotation);
  EXPECT_RLS_ERROR(convert_ruletaker(""), ErrorCode::BadAnnotation);
  EXPECT_RLS_ERROR(convert_ruletaker(R"(("a" "is" "b" "+") ->)"), ErrorCode::BadAnnotation);
}

TEST(Clutrr, SolAndKent) {
  auto f = convert_clutrr({{"Sol", "Kent"}}, {"son"}, kSolFemale);
  EXPECT_EQ(f, Formula(Conjunction{{Literal::rel("Sol", "son", "Kent"), Literal::rel("Kent", "mother", "Sol")}}));
  EXPECT_EQ(encode(f), kSolEnc);
}

TEST(Clutrr, MaleParent) {
  auto f = convert_clutrr({{"Sol", "Kent"}}, {"son"}, {{"Sol", Gender::Male}, {"Kent", Gender::Male}});
  EXPECT_EQ(std::get<Conjunction>(f).literals[1], Literal::rel("Kent", "father", "Sol"));
}

TEST(Clutrr, Errors) {
  EXPECT_RLS_ERROR(convert_clutrr({{"Sol", "Kent"}}, {"neighbor"}, kSolFemale), ErrorCode::UnknownRelation);
  EXPECT_RLS_ERROR(convert_clutrr({{"Sol", "Ann"}}, {"son"}, kSolFemale), ErrorCode::MissingGender);
  EXPECT_ANY_THROW(convert_clutrr({{"Sol", "Kent"}}, {}, kSolFemale));
}

TEST(Clutrr, InverseTableCoversFamilies) {
  const auto& t = InverseTable::builtin();
  EXPECT_EQ(t.inverse("son", Gender::Female), "mother");
  EXPECT_EQ(t.inverse("daughter", Gender::Male), "father");
  EXPECT_EQ(t.inverse("brother", Gender::Female), "sister");
  EXPECT_EQ(t.inverse("wife", Gender::Male), "husband");
  EXPECT_EQ(t.inverse("grandson", Gender::Female), "grandmother");
  EXPECT_EQ(t.inverse("uncle", Gender::Female), "niece");
  EXPECT_FALSE(t.inverse("neighbor", Gender::Male));
  auto custom = InverseTable::parse("# rel\tfemale\tmale\nmentor\tprotegee\tprotege\n");
  EXPECT_EQ(custom.inverse("mentor", Gender::Male), "protege");
}

TEST(ClutrrProperty, PairsAreGenderedInverses) {
  const std::vector<std::string> rels = {"son", "daughter", "mother", "father", "brother", "sister",
                                         "husband", "wife", "grandson", "aunt", "nephew"};
  const std::vector<std::string> people = {"Ann", "Bo", "Cy", "Di"};
  std::map<std::string, Gender> genders = {
      {"Ann", Gender::Female}, {"Bo", Gender::Male}, {"Cy", Gender::Male}, {"Di", Gender::Female}};
  for (std::size_t n = 1; n <= 6; ++n) {
    std::vector<std::pair<std::string, std::string>> edges;
    std::vector<std::string> types;
    for (std::size_t k = 0; k < n; ++k) {
      edges.emplace_back(people[k % 4], people[(k + 1 + n) % 4]);
      types.push_back(rels[(k * 7 + n) % rels.size()]);
    }
    auto lits = std::get<Conjunction>(convert_clutrr(edges, types, genders)).literals;
    ASSERT_EQ(lits.size(), 2 * n);
    for (std::size_t k = 0; k < n; ++k) {
      const auto& fwd = lits[2 * k];
      const auto& inv = lits[2 * k + 1];
      EXPECT_EQ(fwd, Literal::rel(edges[k].first, types[k], edges[k].second));
      EXPECT_EQ(inv.a, fwd.b);
      EXPECT_EQ(inv.b, fwd.a);
      EXPECT_EQ(inv.pred.text(), InverseTable::builtin().inverse(types[k], genders.at(edges[k].first)));
    }
  }
}

TEST(Clutrr, CsvLoader) {
  std::istringstream csv(
      "id,story,edges,edge_types,genders\n"
      "s1,\"Sol took her son Kent to the park.\",\"[('Sol', 'Kent')]\",\"['son']\",\"Sol:female,Kent:male\"\n");
  auto recs = load_clutrr_csv(csv);
  ASSERT_EQ(recs.size(), 1u);
  EXPECT_EQ(recs[0].story_id, "s1");
  EXPECT_EQ(encode(convert_clutrr(recs[0].edges, recs[0].edge_types, recs[0].genders)), kSolEnc);
}

TEST(Lot, MustardNeverTrue) { EXPECT_EQ(encode(convert_lot(mustard("never true"))), kLotEnc); }

TEST(Lot, AlwaysTrueIsPositive) {
  auto f = convert_lot(mustard("always true"));
  EXPECT_EQ(std::get<Conjunction>(f).literals.at(0), Literal::attr("mustard", "capable of", "shade from sun"));
}

TEST(Lot, UnknownValidity) { EXPECT_RLS_ERROR(convert_lot(mustard("sometimes")), ErrorCode::UnknownValidity); }

TEST(Lot, PredicatePhrases) {
  const auto& m = PredicateMap::builtin();
  EXPECT_EQ(m.phrase("/r/CapableOf"), "capable of");
  EXPECT_EQ(m.phrase("/r/IsA"), "is a");
  EXPECT_EQ(m.phrase("/r/HasProperty"), "has property");
  EXPECT_EQ(PredicateMap::parse("/r/PartOf\tis part of\n").phrase("/r/PartOf"), "is part of");
}

TEST(Templates, HarryAndNicePeople) {
  EXPECT_EQ(encode(extract_templated("Harry is young and nice.")), kHarryEnc);
  EXPECT_EQ(encode(extract_templated("Nice people are usually round in shape.")), kRuleEnc);
}

TEST(Templates, FamilyCoverage) {
  auto enc = [](const char* s) { return encode(extract_templated(s)); };
  EXPECT_EQ(enc("Bob is not big."), "<arg0> Bob <pred> is <arg1> big <neg>");
  EXPECT_EQ(enc("The cat chases the dog."), "<arg1> the cat <pred> chases <arg2> the dog");
  EXPECT_EQ(enc("The cat does not chase the dog."), "<arg1> the cat <pred> chases <arg2> the dog <neg>");
  EXPECT_EQ(enc("Red people are big."),
            "<arg0> someone <pred> is <arg1> red <pos> <impl> <arg0> someone <pred> is <arg1> big <pos>");
  EXPECT_EQ(enc("All red things are big."),
            "<arg0> something <pred> is <arg1> red <pos> <impl> <arg0> something <pred> is <arg1> big <pos>");
  EXPECT_EQ(enc("If Bob is red and Bob is big then Bob is cold."),
            "<arg0> Bob <pred> is <arg1> red <pos> <and> <arg0> Bob <pred> is <arg1> big <pos> <impl> "
            "<arg0> Bob <pred> is <arg1> cold <pos>");
  EXPECT_EQ(enc("If someone likes the cat then they are kind."),
            "<arg1> someone <pred> likes <arg2> the cat <impl> <arg0> someone <pred> is <arg1> kind <pos>");
  EXPECT_EQ(enc("If something is round and it does not see the dog, then it is not green."),
            "<arg0> something <pred> is <arg1> round <pos> <and> <arg1> something <pred> sees <arg2> the dog <neg> "
            "<impl> <arg0> something <pred> is <arg1> green <neg>");
}

TEST(Templates, OutOfGrammar) {
  EXPECT_RLS_ERROR(extract_templated("To his chagrin, blorp zag."), ErrorCode::NoTemplateMatch);
  EXPECT_RLS_ERROR(extract_templated(""), ErrorCode::NoTemplateMatch);
}

TEST(Templates, Deterministic) {
  for (int i = 0; i < 3; ++i) EXPECT_EQ(encode(extract_templated("Harry is young and nice.")), kHarryEnc);
}

TEST(Templates, GrammarFileErrors) {
  EXPECT_ANY_THROW(TemplateGrammar::parse("sentence broken"));
  auto g = TemplateGrammar::parse("sentence only facts body=1 :: ^(\\w+) glows\\.$\n");
  EXPECT_ANY_THROW(g.extract("Harry is young."));
}

TEST(Verbs, ThirdPerson) {
  EXPECT_EQ(third_person("chase"), "chases");
  EXPECT_EQ(third_person("carry"), "carries");
  EXPECT_EQ(third_person("push"), "pushes");
  EXPECT_EQ(third_person("have"), "has");
  EXPECT_EQ(base_form("chases"), "chase");
  EXPECT_EQ(base_form("visits"), "visit");
}

TEST(Sentences, JsonlRoundTrip) {
  std::vector<SentenceRecord> recs = {{"s1", "Harry is young and nice.", SentenceRole::Fact, kHarryEnc},
                                      {"s2", "Nice people are round.", SentenceRole::Rule, kRuleEnc},
                                      {"q1", "Harry is round.", SentenceRole::Query, std::nullopt}};
  std::stringstream ss;
  write_sentences_jsonl(ss, recs);
  std::istringstream in(ss.str() + "\n\n");
  auto back = read_sentences_jsonl(in);
  ASSERT_EQ(back.size(), 3u);
  EXPECT_EQ(back[1].gold, kRuleEnc);
  EXPECT_EQ(back[2].role, SentenceRole::Query);
  EXPECT_FALSE(back[2].gold);
}

TEST(Sentences, GoldMustDecode) {
  nlohmann::json j = {{"id", "s"}, {"text", "x"}, {"role", "fact"}, {"gold", "<arg0> Harry"}};
  EXPECT_RLS_ERROR(sentence_from_json(j), ErrorCode::MalformedSequence);
  EXPECT_ANY_THROW(sentence_from_json({{"id", "s"}, {"text", "x"}, {"role", "opinion"}}));
}

TEST(Predictions, ValidGarbledAndDuplicate) {
  std::istringstream in(std::string("{\"id\": \"a\", \"predicted\": \"") + kLotEnc +
                        "\"}\n{\"id\": \"b\", \"predicted\": \"<arg0> Harry <pred> is <arg1>\"}\n");
  auto m = load_predictions(in);
  ASSERT_EQ(m.size(), 2u);
  EXPECT_TRUE(std::holds_alternative<Formula>(m.at("a")));
  EXPECT_TRUE(std::holds_alternative<MalformedSequence>(m.at("b")));
  EXPECT_RLS_ERROR(load_predictions({{"a", kLotEnc}, {"a", kLotEnc}}), ErrorCode::DuplicateId);
}

TEST(Predictions, WriteThenLoad) {
  std::vector<PredictionRecord> recs = {{"x", kSolEnc}, {"y", "garbage"}};
  std::stringstream ss;
  write_predictions_jsonl(ss, recs);
  auto m = load_predictions(ss);
  EXPECT_EQ(encode(std::get<Formula>(m.at("x"))), kSolEnc);
  EXPECT_TRUE(std::holds_alternative<MalformedSequence>(m.at("y")));
}

TEST(TheoryFromSentences, FactAndRuleGiveTwoFactsOneRule) {
  std::vector<SentenceRecord> recs = {{"s1", "Harry is young and nice.", SentenceRole::Fact, kHarryEnc},
                                      {"s2", "Nice people are usually round in shape.", SentenceRole::Rule, kRuleEnc}};
  for (auto src : {FormulaSource::gold(), FormulaSource::templates()}) {
    Theory t = theory_from_sentences(recs, src);
    ASSERT_EQ(t.facts().size(), 2u);
    ASSERT_EQ(t.rules().size(), 1u);
    EXPECT_EQ(t.facts()[0].id, "s1.1");
    EXPECT_EQ(t.source_of(t.facts()[1].id), "s1");
    EXPECT_EQ(t.source_of("s2"), "s2");
    for (const auto& f : t.facts()) EXPECT_TRUE(t.source_of(f.id));
  }
}

TEST(TheoryFromSentences, EmptyAndFailures) {
  EXPECT_EQ(theory_from_sentences({}, FormulaSource::gold()), Theory());
  std::vector<SentenceRecord> recs = {{"s1", "Harry is young.", SentenceRole::Fact, std::nullopt},
                                      {"s2", "Blorp.", SentenceRole::Fact, std::nullopt}};
  PredictionMap preds = load_predictions({{"s1", "<arg0> Harry <pred> is"}});
  try {
    theory_from_sentences(recs, FormulaSource::from_predictions(preds));
    FAIL();
  } catch (const UnresolvedSentence& e) {
    ASSERT_EQ(e.failures().size(), 2u);
    EXPECT_EQ(e.failures()[0].id, "s1");
    EXPECT_EQ(e.failures()[1].id, "s2");
  }
  EXPECT_RLS_ERROR(theory_from_sentences(recs, FormulaSource::templates()), ErrorCode::UnresolvedSentence);
  EXPECT_RLS_ERROR(resolve_formula(recs[1], FormulaSource::from_predictions(preds)), ErrorCode::MissingPrediction);
}

}  // namespace
}  // namespace rls
