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

#include "rls/literal.hpp"

#include <algorithm>
#include <cctype>
#include <tuple>

#include "rls/errors.hpp"

namespace rls {

std::string collapse_whitespace(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(c);
  }
  return out;
}

Term::Term(std::string_view text) : text_(collapse_whitespace(text)) {
  if (text_.empty()) throw Error(ErrorCode::InvalidTerm, "empty term");
  for (auto tag : kReservedTags) {
    if (text_.find(tag) != std::string::npos) {
      throw Error(ErrorCode::InvalidTerm,
                  "term '" + text_ + "' contains reserved tag " + std::string(tag));
    }
  }
}

std::strong_ordering operator<=>(const Literal& lhs, const Literal& rhs) {
  auto key = [](const Literal& l) {
    return std::tie(l.a, l.pred, l.b, l.polarity, l.kind);
  };
  return key(lhs) <=> key(rhs);
}

Literal negate(const Literal& l) {
  Literal out = l;
  out.polarity = flip(l.polarity);
  return out;
}

bool same_atom(const Literal& lhs, const Literal& rhs) {
  return lhs.a == rhs.a && lhs.pred == rhs.pred && lhs.b == rhs.b;
}

std::string to_string(const Literal& l) {
  return "(" + l.a.text() + ", " + l.pred.text() + ", " + l.b.text() + ", " +
         (l.positive() ? "+" : "-") + ")";
}

std::ostream& operator<<(std::ostream& os, const Literal& l) {
  return os << to_string(l);
}

VariableSet::VariableSet(std::vector<std::string> tokens)
    : tokens_(std::move(tokens)) {
  for (auto& t : tokens_) t = Term(t).text();
  std::sort(tokens_.begin(), tokens_.end());
  tokens_.erase(std::unique(tokens_.begin(), tokens_.end()), tokens_.end());
}

bool VariableSet::contains(std::string_view text) const {
  return std::find(tokens_.begin(), tokens_.end(), text) != tokens_.end();
}

bool VariableSet::contains(const Term& t) const { return contains(t.text()); }

bool is_ground(const Literal& l, const VariableSet& vars) {
  return !vars.contains(l.a) && !vars.contains(l.b);
}

}  // namespace rls
