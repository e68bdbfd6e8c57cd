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

#include "rls/errors.hpp"

namespace rls {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidTerm: return "InvalidTerm";
    case ErrorCode::InvalidLiteral: return "InvalidLiteral";
    case ErrorCode::InvalidRule: return "InvalidRule";
    case ErrorCode::InvalidTheory: return "InvalidTheory";
    case ErrorCode::NoVariable: return "NoVariable";
    case ErrorCode::MalformedSequence: return "MalformedSequence";
    case ErrorCode::NotStratified: return "NotStratified";
    case ErrorCode::AlreadyProvable: return "AlreadyProvable";
    case ErrorCode::UnknownId: return "UnknownId";
    case ErrorCode::InvalidThreshold: return "InvalidThreshold";
    case ErrorCode::BadAnnotation: return "BadAnnotation";
    case ErrorCode::UnknownRelation: return "UnknownRelation";
    case ErrorCode::MissingGender: return "MissingGender";
    case ErrorCode::UnknownValidity: return "UnknownValidity";
    case ErrorCode::NoTemplateMatch: return "NoTemplateMatch";
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::UnresolvedSentence: return "UnresolvedSentence";
    case ErrorCode::MissingPrediction: return "MissingPrediction";
    case ErrorCode::GenerationFailed: return "GenerationFailed";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

namespace {

std::string describe(const std::vector<UnresolvedSentence::Failure>& failures) {
  std::string msg = "unresolved sentences:";
  for (const auto& f : failures) msg += " " + f.id + " (" + f.reason + ");";
  return msg;
}

}  // namespace

UnresolvedSentence::UnresolvedSentence(std::vector<Failure> failures)
    : Error(ErrorCode::UnresolvedSentence, describe(failures)),
      failures_(std::move(failures)) {}

}  // namespace rls
