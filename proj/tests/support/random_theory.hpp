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

// Small random theories for property tests.

#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "rls/theory.hpp"

namespace rls::testing {

struct RandomTheoryOptions {
  int max_entities = 6;
  int max_rules = 8;
  int max_facts = 10;
  int properties = 5;
  int relations = 2;
  /// Allows negative facts, consequents and antecedents, keeping the theory
  /// stratified: a negative antecedent on predicate p only appears in rules
  /// whose consequent predicate sits on a strictly higher level than p.
  bool negation = false;
};

class TheoryFuzzer {
 public:
  explicit TheoryFuzzer(std::uint64_t seed) : rng_(seed) {}

  int below(int n) { return static_cast<int>(rng_() % static_cast<std::uint64_t>(n)); }
  bool coin(double p = 0.5) { return std::uniform_real_distribution<double>(0, 1)(rng_) < p; }

  Theory theory(const RandomTheoryOptions& o) {
    const int n_entities = 1 + below(o.max_entities);
    std::vector<std::string> entities;
    for (int i = 0; i < n_entities; ++i) entities.push_back(kEntities[i]);

    // Predicates: properties then relations, each with a level.
    struct Pred {
      bool relation;
      std::string name;
      int level;
    };
    std::vector<Pred> preds;
    for (int i = 0; i < o.properties; ++i) preds.push_back({false, kProps[i], below(3)});
    for (int i = 0; i < o.relations; ++i) preds.push_back({true, kRels[i], below(3)});
    preds.front().level = 0;  // the fallback antecedent below

    auto polarity = [&](double p) {
      return o.negation && coin(p) ? Polarity::Negative : Polarity::Positive;
    };
    auto literal = [&](const Pred& p, const std::string& subj, const std::string& obj, Polarity pol) {
      return p.relation ? Literal::rel(subj, p.name, obj, pol) : Literal::attr(subj, "is", p.name, pol);
    };
    auto entity = [&] { return entities[below(n_entities)]; };

    std::vector<Fact> facts;
    const int n_facts = below(o.max_facts + 1);
    for (int i = 0; i < n_facts; ++i) {
      const Pred& p = preds[below(static_cast<int>(preds.size()))];
      facts.push_back({"f" + std::to_string(i), literal(p, entity(), p.relation ? entity() : "", polarity(0.2))});
    }

    std::vector<Rule> rules;
    const int n_rules = below(o.max_rules + 1);
    for (int i = 0; i < n_rules; ++i) {
      const Pred& head = preds[below(static_cast<int>(preds.size()))];
      const bool ground_rule = coin(0.1);
      const std::string var = ground_rule ? entity() : (coin() ? "someone" : "something");
      // Where the variable sits in a relation literal.
      auto slot_literal = [&](const Pred& p, Polarity pol) {
        if (!p.relation) return literal(p, var, "", pol);
        return coin(0.7) ? literal(p, var, entity(), pol) : literal(p, entity(), var, pol);
      };
      Rule r{"r" + std::to_string(i), {}, slot_literal(head, polarity(0.25))};
      const int n_ante = 1 + below(3);
      for (int k = 0; k < n_ante; ++k) {
        const Pred& p = preds[below(static_cast<int>(preds.size()))];
        Polarity pol = Polarity::Positive;
        if (o.negation && p.level < head.level && coin(0.4)) pol = Polarity::Negative;
        if (p.level > head.level) continue;  // keep negative edges pointing down
        r.antecedents.push_back(slot_literal(p, pol));
      }
      if (r.antecedents.empty()) {
        r.antecedents.push_back(slot_literal(preds.front(), Polarity::Positive));
      }
      // The variable must be bound by some antecedent.
      bool bound = ground_rule;
      for (const auto& l : r.antecedents) bound = bound || l.a.text() == var || l.b.text() == var;
      if (!bound) r.antecedents.push_back(literal(preds.front(), var, "", Polarity::Positive));
      rules.push_back(std::move(r));
    }
    return Theory(std::move(facts), std::move(rules), {});
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    std::shuffle(v.begin(), v.end(), rng_);
  }

 private:
  static constexpr const char* kEntities[] = {"Anne", "Bob", "Carl", "Dora", "Emil", "Fay"};
  static constexpr const char* kProps[] = {"big", "cold", "green", "kind", "nice", "red", "round"};
  static constexpr const char* kRels[] = {"likes", "sees", "chases"};

  std::mt19937_64 rng_;
};

}  // namespace rls::testing
