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

// Tag-delimited sequence form of formulas, e.g.
//
//   <arg0> Harry <pred> is <arg1> young <pos> <and> <arg0> Harry <pred> is
//   <arg1> nice <pos>
//
// Grammar (SP is a single space):
//
//   formula     = conjunction | rule ;
//   rule        = conjunction SP "<impl>" SP literal ;
//   conjunction = literal { SP "<and>" SP literal } ;
//   attr        = "<arg0>" SP text SP "<pred>" SP text SP "<arg1>" SP text SP pol ;
//   rel         = "<arg1>" SP text SP "<pred>" SP text SP "<arg2>" SP text [ SP pol ] ;
//   pol         = "<pos>" | "<neg>" ;
//
// Terms may span several words; the next tag ends them.

#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "rls/errors.hpp"
#include "rls/literal.hpp"

namespace rls {

struct Conjunction {
  std::vector<Literal> literals;
  friend bool operator==(const Conjunction&, const Conjunction&) = default;
};

struct RuleFormula {
  std::vector<Literal> antecedents;
  Literal consequent;
  friend bool operator==(const RuleFormula&, const RuleFormula&) = default;
};

using Formula = std::variant<Conjunction, RuleFormula>;

struct EncodeOptions {
  /// Emit <pos> on positive relation literals too.
  bool always_emit_polarity = false;
};

/// Canonical serialization. Throws Error(InvalidArgument) on an empty
/// conjunction or antecedent list.
std::string encode(const Formula& f, const EncodeOptions& options = {});
std::string encode(const Literal& l, const EncodeOptions& options = {});

/// Parses any string; throws MalformedSequence on grammar violations.
Formula decode(std::string_view s);

/// Non-throwing decode for places where malformed input is data.
using DecodeResult = std::variant<Formula, MalformedSequence>;
DecodeResult try_decode(std::string_view s) noexcept;

/// encode(decode(s)).
std::string canonicalize(std::string_view s);

/// Decodes a sequence that must hold exactly one literal.
Literal decode_literal(std::string_view s);

}  // namespace rls
