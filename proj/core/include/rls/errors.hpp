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

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rls {

/// Machine-readable failure category. The name returned by `to_string` is
/// what the CLI and the HTTP service report as the error "code".
enum class ErrorCode {
  InvalidTerm,
  InvalidLiteral,
  InvalidRule,
  InvalidTheory,
  NoVariable,
  MalformedSequence,
  NotStratified,
  AlreadyProvable,
  UnknownId,
  InvalidThreshold,
  BadAnnotation,
  UnknownRelation,
  MissingGender,
  UnknownValidity,
  NoTemplateMatch,
  DuplicateId,
  UnresolvedSentence,
  MissingPrediction,
  GenerationFailed,
  InvalidArgument,
  Io,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// A sequence that does not conform to the encoding grammar. `position` is
/// the byte offset into the original input of the offending token (or the
/// input length when the sequence ends early).
class MalformedSequence : public Error {
 public:
  MalformedSequence(std::size_t position, std::string reason)
      : Error(ErrorCode::MalformedSequence,
              "malformed sequence at " + std::to_string(position) + ": " + reason),
        position_(position),
        reason_(std::move(reason)) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::size_t position_;
  std::string reason_;
};

class UnresolvedSentence : public Error {
 public:
  struct Failure {
    std::string id;
    std::string reason;
  };

  explicit UnresolvedSentence(std::vector<Failure> failures);

  const std::vector<Failure>& failures() const noexcept { return failures_; }

 private:
  std::vector<Failure> failures_;
};

}  // namespace rls
