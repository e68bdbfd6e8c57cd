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

#include "rls/generator.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <random>
#include <set>

#include "rls/codec.hpp"
#include "rls/errors.hpp"
#include "rls/oracle.hpp"

namespace rls {
namespace {

constexpr std::array<std::string_view, 8> kNames = {"Anne", "Bob",  "Charlie", "Dave",
                                                    "Erin", "Fiona", "Gary",   "Harry"};
constexpr std::array<std::string_view, 10> kAnimals = {
    "the bear", "the cat",    "the cow",      "the dog",   "the lion",
    "the mouse", "the rabbit", "the squirrel", "the tiger", "the bald eagle"};
constexpr std::array<std::string_view, 20> kProperties = {
    "big",   "blue",  "cold",  "furry", "green", "kind",  "nice",  "quiet", "red",  "rough",
    "round", "smart", "white", "young", "small", "strong", "heavy", "sad",  "tall", "wet"};
constexpr std::array<std::string_view, 6> kVerbs = {"chase", "eat", "like", "need", "see", "visit"};
constexpr int kMaxAttempts = 64;

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Portable draws: the standard distributions are not specified bit-exactly.
struct Rng {
  std::mt19937_64 engine;
  explicit Rng(std::uint64_t seed) : engine(seed) {}
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(engine() % n); }
  bool chance(double p) { return static_cast<double>(engine() >> 11) * 0x1.0p-53 < p; }
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }
};

// A predicate shape applied to a subject: "is <prop>" or "<verb>s <object>".
struct Shape {
  bool relation = false;
  std::string word;    // property, or base-form verb
  std::string object;  // relation only
};

Literal make_literal(const Shape& s, const std::string& subject, Polarity pol) {
  if (s.relation) return Literal::rel(subject, third_person(s.word), s.object, pol);
  return Literal::attr(subject, "is", s.word, pol);
}

std::string capitalized(std::string s) {
  if (!s.empty()) s[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  return s;
}

// Clause text for a literal whose subject reads as `subject`; `plural`
// selects "they are"/"they chase" agreement.
std::string clause(const Shape& s, const std::string& subject, bool plural, Polarity pol) {
  bool neg = pol == Polarity::Negative;
  if (!s.relation) {
    return subject + (plural ? " are " : " is ") + (neg ? "not " : "") + s.word;
  }
  if (neg) return subject + (plural ? " do not " : " does not ") + s.word + " " + s.object;
  return subject + " " + (plural ? s.word : third_person(s.word)) + " " + s.object;
}

struct RuleSpec {
  std::string var;  // someone | something
  std::vector<std::pair<const Shape*, Polarity>> ante;
  std::pair<const Shape*, Polarity> cons;
};

std::string render_rule(const RuleSpec& r, Rng& rng) {
  bool all_attr = !r.cons.first->relation;
  for (const auto& [s, pol] : r.ante) all_attr = all_attr && !s->relation && pol == Polarity::Positive;
  const std::string noun = r.var == "someone" ? "people" : "things";
  if (all_attr && rng.chance(0.4)) {
    std::string props;
    for (std::size_t i = 0; i < r.ante.size(); ++i) {
      props += (i ? ", " : "") + r.ante[i].first->word;
    }
    std::string neg = r.cons.second == Polarity::Negative ? "not " : "";
    if (rng.chance(0.5)) return "All " + props + " " + noun + " are " + neg + r.cons.first->word + ".";
    return capitalized(props) + " " + noun + " are " + neg + r.cons.first->word + ".";
  }
  const bool plural = r.var == "someone";
  const std::string pronoun = plural ? "they" : "it";
  std::vector<std::string> parts;
  for (std::size_t i = 0; i < r.ante.size(); ++i) {
    const auto& [s, pol] = r.ante[i];
    if (i == 0) {
      parts.push_back(clause(*s, r.var, false, pol));
      continue;
    }
    bool prev_attr = !r.ante[i - 1].first->relation;
    if (prev_attr && !s->relation && rng.chance(0.5)) {
      parts.push_back((pol == Polarity::Negative ? "not " : "") + s->word);
    } else {
      parts.push_back(clause(*s, pronoun, plural, pol));
    }
  }
  std::string body;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) body += (i + 1 == parts.size()) ? " and " : ", ";
    body += parts[i];
  }
  return "If " + body + (rng.chance(0.3) ? ", then " : " then ") +
         clause(*r.cons.first, pronoun, plural, r.cons.second) + ".";
}

std::string render_fact(const Shape& s, const std::string& subject, Polarity pol) {
  return capitalized(clause(s, subject, false, pol)) + ".";
}

struct Attempt {
  GeneratedTheory out;
  int max_depth = -1;
};

Attempt attempt(const GenParams& p, std::uint64_t seed, const std::string& prefix) {
  Rng rng(seed);
  VariableSet vars;

  // Vocabulary.
  std::vector<std::string> entities;
  {
    std::vector<std::string> pool(kNames.begin(), kNames.end());
    pool.insert(pool.end(), kAnimals.begin(), kAnimals.end());
    rng.shuffle(pool);
    entities.assign(pool.begin(), pool.begin() + p.entities);
  }
  std::vector<Shape> shapes;
  {
    std::vector<std::string> props(kProperties.begin(), kProperties.end());
    rng.shuffle(props);
    for (int i = 0; i < p.properties; ++i) shapes.push_back({false, props[i], {}});
    if (p.relation_probability > 0) {
      // Distinct (verb, object) pairs: a repeated pair at two levels would
      // put the same atoms on both sides of a rule.
      const std::size_t rel_shapes = std::max(1, p.properties / 3);
      std::set<std::pair<std::string, std::string>> taken;
      for (int tries = 0; taken.size() < rel_shapes && tries < 64; ++tries) {
        Shape s{true, std::string(kVerbs[rng.below(kVerbs.size())]),
                entities[rng.below(entities.size())]};
        if (taken.insert({s.word, s.object}).second) shapes.push_back(std::move(s));
      }
    }
    // Position in `shapes` is the shape's level: rule antecedents always sit
    // strictly below the consequent, so every theory is acyclic.
    rng.shuffle(shapes);
  }
  std::vector<std::size_t> attr_levels, rel_levels;
  for (std::size_t i = 0; i < shapes.size(); ++i) {
    (shapes[i].relation ? rel_levels : attr_levels).push_back(i);
  }

  auto pick_var = [&] { return std::string(rng.chance(0.5) ? "someone" : "something"); };
  auto pol = [&](double prob) { return rng.chance(prob) ? Polarity::Negative : Polarity::Positive; };

  std::vector<RuleSpec> rules;
  // Guaranteed chain over increasing attribute levels.
  std::vector<std::size_t> chain;
  {
    std::vector<std::size_t> pick = attr_levels;
    rng.shuffle(pick);
    chain.assign(pick.begin(), pick.begin() + p.max_depth + 1);
    std::sort(chain.begin(), chain.end());
    for (int i = 0; i < p.max_depth; ++i) {
      rules.push_back({pick_var(), {{&shapes[chain[i]], Polarity::Positive}},
                       {&shapes[chain[i + 1]], Polarity::Positive}});
    }
  }
  int extra_rules = std::max(0, p.rules - p.max_depth);
  for (int k = 0; k < extra_rules; ++k) {
    // Consequent: any level above 0, attributes favoured.
    std::size_t c;
    if (!rel_levels.empty() && rng.chance(p.relation_probability)) {
      c = rel_levels[rng.below(rel_levels.size())];
    } else {
      c = attr_levels[rng.below(attr_levels.size())];
    }
    if (c == 0) continue;
    RuleSpec r{pick_var(), {}, {&shapes[c], pol(p.negation_probability)}};
    std::size_t n = 1 + rng.below(std::min<std::size_t>(3, c));
    std::set<std::size_t> used;
    while (r.ante.size() < n) {
      std::size_t a = rng.below(c);
      if (!used.insert(a).second) continue;
      r.ante.push_back({&shapes[a], pol(p.negation_probability)});
    }
    rules.push_back(std::move(r));
  }
  rng.shuffle(rules);

  // Facts: the chain start plus random ones.
  struct FactSpec {
    std::string subject;
    std::vector<std::pair<const Shape*, Polarity>> items;
  };
  std::vector<FactSpec> facts;
  std::set<std::pair<std::string, std::string>> seen;  // (subject, shape word+object)
  auto key = [](const Shape& s) { return s.word + "|" + s.object; };
  const std::string start = entities[rng.below(entities.size())];
  facts.push_back({start, {{&shapes[chain[0]], Polarity::Positive}}});
  seen.insert({start, key(shapes[chain[0]])});
  for (int k = 1, guard = 0; k < p.facts && guard < 10 * p.facts; ++guard) {
    const std::string& e = entities[rng.below(entities.size())];
    const Shape* s = &shapes[rng.below(shapes.size())];
    if (s->relation && s->object == e) continue;
    if (!seen.insert({e, key(*s)}).second) continue;
    FactSpec f{e, {{s, pol(p.negation_probability)}}};
    ++k;
    if (!s->relation && k < p.facts && rng.chance(0.2)) {
      const Shape* s2 = &shapes[attr_levels[rng.below(attr_levels.size())]];
      if (seen.insert({e, key(*s2)}).second) {
        f.items.push_back({s2, pol(p.negation_probability)});
        ++k;
      }
    }
    facts.push_back(std::move(f));
  }
  rng.shuffle(facts);

  // Sentences and the gold theory.
  Attempt a;
  std::vector<Fact> theory_facts;
  std::vector<Rule> theory_rules;
  std::map<std::string, std::string> provenance;
  int sid = 0;
  for (const auto& f : facts) {
    std::string id = prefix + "s" + std::to_string(++sid);
    Conjunction c;
    std::string text;
    for (std::size_t i = 0; i < f.items.size(); ++i) {
      c.literals.push_back(make_literal(*f.items[i].first, f.subject, f.items[i].second));
    }
    if (f.items.size() == 1) {
      text = render_fact(*f.items[0].first, f.subject, f.items[0].second);
    } else {
      text = capitalized(clause(*f.items[0].first, f.subject, false, f.items[0].second)) +
             " and " + (f.items[1].second == Polarity::Negative ? "not " : "") +
             f.items[1].first->word + ".";
    }
    for (std::size_t i = 0; i < c.literals.size(); ++i) {
      std::string fid = c.literals.size() == 1 ? id : id + "." + std::to_string(i + 1);
      theory_facts.push_back({fid, c.literals[i]});
      provenance[fid] = id;
    }
    a.out.sentences.push_back({id, text, SentenceRole::Fact, encode(Formula{c})});
  }
  for (const auto& r : rules) {
    std::string id = prefix + "s" + std::to_string(++sid);
    RuleFormula rf{{}, make_literal(*r.cons.first, r.var, r.cons.second)};
    for (const auto& [s, pl] : r.ante) rf.antecedents.push_back(make_literal(*s, r.var, pl));
    theory_rules.push_back({id, rf.antecedents, rf.consequent});
    provenance[id] = id;
    a.out.sentences.push_back({id, render_rule(r, rng), SentenceRole::Rule, encode(Formula{rf})});
  }
  a.out.theory = Theory(std::move(theory_facts), std::move(theory_rules), std::move(provenance));

  // Oracle labels for every query over the vocabulary.
  auto model = oracle::naive_closure(a.out.theory);
  if (!model.total) throw Error(ErrorCode::GenerationFailed, "generated theory is not stratified");
  std::vector<GenQuery> queries;
  for (const auto& e : entities) {
    for (const auto& s : shapes) {
      if (s.relation && s.object == e) continue;
      for (Polarity pl : {Polarity::Positive, Polarity::Negative}) {
        Literal q = make_literal(s, e, pl);
        bool truth = model.truth(q);
        int depth = 0;
        if (truth) {
          depth = *model.depth(q);
        } else if (auto d = model.depth(negate(q)); d && model.atoms.count(negate(q))) {
          depth = *d;
        }
        a.max_depth = std::max(a.max_depth, depth);
        queries.push_back({{"", render_fact(s, e, pl), SentenceRole::Query,
                            encode(Formula{Conjunction{{q}}})},
                           q, truth, depth});
      }
    }
  }
  std::sort(queries.begin(), queries.end(), [](const GenQuery& x, const GenQuery& y) {
    if (x.depth != y.depth) return x.depth < y.depth;
    return x.literal < y.literal;
  });
  for (std::size_t i = 0; i < queries.size(); ++i) {
    queries[i].sentence.id = prefix + "q" + std::to_string(i + 1);
  }
  a.out.queries = std::move(queries);
  return a;
}

}  // namespace

void GenParams::validate() const {
  auto need = [](bool ok, const char* what) {
    if (!ok) throw Error(ErrorCode::InvalidArgument, what);
  };
  need(entities >= 1 && entities <= static_cast<int>(kNames.size() + kAnimals.size()),
       "entity count must be between 1 and 18");
  need(max_depth >= 0, "target depth must be nonnegative");
  need(properties >= 1 && properties <= static_cast<int>(kProperties.size()),
       "property count must be between 1 and 20");
  need(properties >= max_depth + 1, "property count must exceed the target depth");
  need(rules >= 0 && facts >= 1, "rule count must be nonnegative and fact count positive");
  need(negation_probability >= 0 && negation_probability <= 1,
       "negation probability must lie in [0, 1]");
  need(relation_probability >= 0 && relation_probability <= 1,
       "relation probability must lie in [0, 1]");
}

GeneratedTheory generate_theory(const GenParams& p, const std::string& id_prefix) {
  p.validate();
  for (int i = 0; i < kMaxAttempts; ++i) {
    auto a = attempt(p, splitmix(p.seed + static_cast<std::uint64_t>(i) * 0x100000001b3ULL),
                     id_prefix);
    if (a.max_depth >= p.max_depth) return std::move(a.out);
  }
  throw Error(ErrorCode::GenerationFailed,
              "target depth " + std::to_string(p.max_depth) + " not reached in " +
                  std::to_string(kMaxAttempts) + " attempts");
}

InstanceWithTheory generate_instance(const GenParams& base, int depth, int index) {
  GenParams p = base;
  p.max_depth = std::max(base.max_depth, depth);
  p.properties = std::clamp(std::max(p.properties, p.max_depth + 2), 1,
                            static_cast<int>(kProperties.size()));
  p.rules = std::max(p.rules, p.max_depth);
  p.seed = splitmix(base.seed ^ splitmix(static_cast<std::uint64_t>(depth) << 32 |
                                         static_cast<std::uint32_t>(index)));
  const std::string prefix = "d" + std::to_string(depth) + "." + std::to_string(index) + ".";
  auto g = generate_theory(p, prefix);

  const bool want = index % 2 == 0;
  std::vector<const GenQuery*> same, other;
  for (const auto& q : g.queries) {
    if (q.depth != depth) continue;
    (q.label == want ? same : other).push_back(&q);
  }
  const auto& pool = same.empty() ? other : same;
  if (pool.empty()) {
    throw Error(ErrorCode::GenerationFailed, "no query of depth " + std::to_string(depth));
  }
  Rng rng(p.seed ^ 0x5bd1e995ULL);
  const GenQuery& q = *pool[rng.below(pool.size())];
  QAInstance inst{prefix.substr(0, prefix.size() - 1), g.sentences, q.sentence, q.label, q.depth};
  return {std::move(inst), std::move(g.theory), q.literal};
}

std::vector<QAInstance> generate_instances(const GenParams& base, int depth, int count) {
  std::vector<QAInstance> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) out.push_back(generate_instance(base, depth, i).instance);
  return out;
}

}  // namespace rls
