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

#include <array>
#include <compare>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace rls {

/// Reserved tags of the sequence encoding. No term may contain one.
inline constexpr std::array<std::string_view, 8> kReservedTags = {
    "<arg0>", "<arg1>", "<arg2>", "<pred>", "<pos>", "<neg>", "<and>", "<impl>"};

/// Trims and collapses internal whitespace runs to single spaces.
std::string collapse_whitespace(std::string_view text);

/// A word or phrase filling one slot of a literal. Always normalized:
/// trimmed, single-spaced, nonempty and free of reserved tags.
class Term {
 public:
  /// Normalizes `text`; throws Error(InvalidTerm) when the result is empty or
  /// contains a reserved tag.
  explicit Term(std::string_view text);

  const std::string& text() const noexcept { return text_; }

  friend bool operator==(const Term&, const Term&) = default;
  friend std::strong_ordering operator<=>(const Term& lhs, const Term& rhs) {
    return lhs.text_.compare(rhs.text_) <=> 0;
  }

 private:
  std::string text_;
};

enum class Polarity { Positive, Negative };

inline Polarity flip(Polarity p) {
  return p == Polarity::Positive ? Polarity::Negative : Polarity::Positive;
}

/// Attribute literals follow (subject, is, property, polarity); relation
/// literals (entity, relation, entity, polarity).
enum class LiteralKind { Attribute, Relation };

struct Literal {
  LiteralKind kind = LiteralKind::Attribute;
  Term a;
  Term pred;
  Term b;
  Polarity polarity = Polarity::Positive;

  Literal(LiteralKind kind, Term a, Term pred, Term b, Polarity polarity)
      : kind(kind), a(std::move(a)), pred(std::move(pred)), b(std::move(b)),
        polarity(polarity) {}

  static Literal attr(std::string_view subject, std::string_view pred,
                      std::string_view property,
                      Polarity polarity = Polarity::Positive) {
    return {LiteralKind::Attribute, Term(subject), Term(pred), Term(property),
            polarity};
  }
  static Literal rel(std::string_view from, std::string_view relation,
                     std::string_view to,
                     Polarity polarity = Polarity::Positive) {
    return {LiteralKind::Relation, Term(from), Term(relation), Term(to),
            polarity};
  }

  bool positive() const { return polarity == Polarity::Positive; }

  friend bool operator==(const Literal&, const Literal&) = default;
  /// Lexicographic on (a, pred, b, polarity, kind).
  friend std::strong_ordering operator<=>(const Literal& lhs,
                                          const Literal& rhs);
};

/// Same literal with the polarity flipped.
Literal negate(const Literal& l);

/// The positive member of {l, negate(l)}.
inline Literal positive_form(const Literal& l) {
  return l.positive() ? l : negate(l);
}

/// True when both literals talk about the same (a, pred, b) triple.
bool same_atom(const Literal& lhs, const Literal& rhs);

/// "(Harry, is, young, +)"; relation literals render the same way.
std::string to_string(const Literal& l);
std::ostream& operator<<(std::ostream& os, const Literal& l);

/// The tokens that stand for a rule's universally quantified variable.
class VariableSet {
 public:
  VariableSet() : tokens_{"someone", "something"} {}
  explicit VariableSet(std::vector<std::string> tokens);

  bool contains(const Term& t) const;
  bool contains(std::string_view text) const;
  const std::vector<std::string>& tokens() const noexcept { return tokens_; }

  friend bool operator==(const VariableSet&, const VariableSet&) = default;

 private:
  std::vector<std::string> tokens_;
};

/// Ground iff neither `a` nor `b` is a variable token.
bool is_ground(const Literal& l, const VariableSet& vars = VariableSet());

}  // namespace rls
