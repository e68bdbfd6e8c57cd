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

#include "rls/codec.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

namespace rls {
namespace {

enum class Tag { Arg0, Arg1, Arg2, Pred, Pos, Neg, And, Impl };

struct Token {
  std::string_view text;
  std::size_t offset;
  std::optional<Tag> tag;
};

std::optional<Tag> tag_of(std::string_view word) {
  static constexpr std::pair<std::string_view, Tag> kTags[] = {
      {"<arg0>", Tag::Arg0}, {"<arg1>", Tag::Arg1}, {"<arg2>", Tag::Arg2},
      {"<pred>", Tag::Pred}, {"<pos>", Tag::Pos},   {"<neg>", Tag::Neg},
      {"<and>", Tag::And},   {"<impl>", Tag::Impl}};
  for (const auto& [text, tag] : kTags) {
    if (word == text) return tag;
  }
  return std::nullopt;
}

// Anything shaped like "<word>" is treated as an attempted tag.
bool looks_like_tag(std::string_view word) {
  if (word.size() < 3 || word.front() != '<' || word.back() != '>') return false;
  return std::all_of(word.begin() + 1, word.end() - 1, [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

class Parser {
 public:
  explicit Parser(std::string_view input) : input_(input) { tokenize(); }

  Formula parse() {
    if (tokens_.empty()) fail(0, "empty sequence");
    std::size_t impl_count = 0;
    for (const auto& t : tokens_) {
      if (t.tag == Tag::Impl && ++impl_count > 1) {
        fail(t.offset, "more than one <impl>");
      }
    }
    std::vector<Literal> literals;
    literals.push_back(parse_literal());
    while (!done() && peek().tag == Tag::And) {
      next();
      literals.push_back(parse_literal());
    }
    if (done()) return Conjunction{std::move(literals)};
    if (peek().tag != Tag::Impl) fail(peek().offset, "expected <and>, <impl> or end of sequence");
    next();
    if (done()) fail(input_.size(), "<impl> without consequent");
    Literal consequent = parse_literal();
    if (!done()) fail(peek().offset, "trailing tokens after consequent");
    return RuleFormula{std::move(literals), std::move(consequent)};
  }

 private:
  [[noreturn]] void fail(std::size_t position, std::string reason) {
    throw MalformedSequence(position, std::move(reason));
  }

  void tokenize() {
    std::size_t i = 0;
    while (i < input_.size()) {
      while (i < input_.size() && std::isspace(static_cast<unsigned char>(input_[i]))) ++i;
      if (i >= input_.size()) break;
      std::size_t start = i;
      while (i < input_.size() && !std::isspace(static_cast<unsigned char>(input_[i]))) ++i;
      auto word = input_.substr(start, i - start);
      auto tag = tag_of(word);
      if (!tag) {
        if (looks_like_tag(word)) fail(start, "unknown tag " + std::string(word));
        for (auto reserved : kReservedTags) {
          if (word.find(reserved) != std::string_view::npos) {
            fail(start, "tag glued to a word: " + std::string(word));
          }
        }
      }
      tokens_.push_back({word, start, tag});
    }
  }

  bool done() const { return pos_ >= tokens_.size(); }
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }

  void expect(Tag tag, const char* what) {
    if (done()) fail(input_.size(), std::string("expected ") + what + " but sequence ended");
    if (peek().tag != tag) fail(peek().offset, std::string("expected ") + what);
    next();
  }

  Term parse_text(const char* after) {
    std::string text;
    while (!done() && !peek().tag) {
      if (!text.empty()) text.push_back(' ');
      text.append(next().text);
    }
    if (text.empty()) {
      fail(done() ? input_.size() : peek().offset,
           std::string("empty term after ") + after);
    }
    return Term(text);
  }

  std::optional<Polarity> parse_polarity() {
    if (done()) return std::nullopt;
    if (peek().tag == Tag::Pos) { next(); return Polarity::Positive; }
    if (peek().tag == Tag::Neg) { next(); return Polarity::Negative; }
    return std::nullopt;
  }

  Literal parse_literal() {
    if (done()) fail(input_.size(), "expected a literal");
    const Token& head = peek();
    if (head.tag == Tag::Arg0) {
      next();
      Term a = parse_text("<arg0>");
      expect(Tag::Pred, "<pred>");
      Term pred = parse_text("<pred>");
      expect(Tag::Arg1, "<arg1>");
      Term b = parse_text("<arg1>");
      std::size_t at = done() ? input_.size() : peek().offset;
      auto polarity = parse_polarity();
      if (!polarity) fail(at, "attribute literal requires <pos> or <neg>");
      return {LiteralKind::Attribute, std::move(a), std::move(pred), std::move(b), *polarity};
    }
    if (head.tag == Tag::Arg1) {
      next();
      Term a = parse_text("<arg1>");
      expect(Tag::Pred, "<pred>");
      Term pred = parse_text("<pred>");
      expect(Tag::Arg2, "<arg2>");
      Term b = parse_text("<arg2>");
      auto polarity = parse_polarity().value_or(Polarity::Positive);
      return {LiteralKind::Relation, std::move(a), std::move(pred), std::move(b), polarity};
    }
    if (head.tag == Tag::Impl) fail(head.offset, "<impl> without antecedent");
    fail(head.offset, head.tag ? "literal must start with <arg0> or <arg1>"
                               : "unexpected text outside a literal");
  }

  std::string_view input_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

void append_literal(std::string& out, const Literal& l, const EncodeOptions& options) {
  if (!out.empty()) out.push_back(' ');
  bool attr = l.kind == LiteralKind::Attribute;
  out += attr ? "<arg0> " : "<arg1> ";
  out += l.a.text();
  out += " <pred> ";
  out += l.pred.text();
  out += attr ? " <arg1> " : " <arg2> ";
  out += l.b.text();
  if (attr || !l.positive() || options.always_emit_polarity) {
    out += l.positive() ? " <pos>" : " <neg>";
  }
}

void append_conjunction(std::string& out, const std::vector<Literal>& literals,
                        const EncodeOptions& options) {
  if (literals.empty()) {
    throw Error(ErrorCode::InvalidArgument, "cannot encode an empty conjunction");
  }
  for (std::size_t i = 0; i < literals.size(); ++i) {
    if (i > 0) out += " <and>";
    append_literal(out, literals[i], options);
  }
}

}  // namespace

std::string encode(const Literal& l, const EncodeOptions& options) {
  std::string out;
  append_literal(out, l, options);
  return out;
}

std::string encode(const Formula& f, const EncodeOptions& options) {
  std::string out;
  if (const auto* c = std::get_if<Conjunction>(&f)) {
    append_conjunction(out, c->literals, options);
  } else {
    const auto& r = std::get<RuleFormula>(f);
    append_conjunction(out, r.antecedents, options);
    out += " <impl>";
    append_literal(out, r.consequent, options);
  }
  return out;
}

Formula decode(std::string_view s) { return Parser(s).parse(); }

DecodeResult try_decode(std::string_view s) noexcept {
  try {
    return decode(s);
  } catch (const MalformedSequence& e) {
    return e;
  } catch (const std::exception& e) {
    return MalformedSequence(0, e.what());
  }
}

std::string canonicalize(std::string_view s) { return encode(decode(s)); }

Literal decode_literal(std::string_view s) {
  auto f = decode(s);
  const auto* c = std::get_if<Conjunction>(&f);
  if (!c || c->literals.size() != 1) {
    throw MalformedSequence(0, "expected exactly one literal");
  }
  return c->literals.front();
}

}  // namespace rls
