// Copyright 2026 The Epicorpus Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "epicorpus/common/error.h"

namespace epicorpus {

std::string_view ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kIo: return "io_error";
    case ErrorKind::kParse: return "parse_error";
    case ErrorKind::kConflict: return "conflict_error";
    case ErrorKind::kValidation: return "validation_error";
    case ErrorKind::kOutOfBounds: return "out_of_bounds";
    case ErrorKind::kUnknownLabel: return "unknown_label";
    case ErrorKind::kMissingReference: return "missing_reference";
    case ErrorKind::kAlignment: return "alignment_error";
    case ErrorKind::kEmptySelection: return "empty_selection";
    case ErrorKind::kInvalidArgument: return "invalid_argument";
    case ErrorKind::kQuerySyntax: return "query_syntax_error";
    case ErrorKind::kNotFound: return "not_found";
  }
  return "error";
}

ParseError::ParseError(const std::string &source, std::size_t line,
                       const std::string &message)
    : Error(ErrorKind::kParse,
            source + (line > 0 ? ":" + std::to_string(line) : "") + ": " +
                message),
      line_(line) {}

QuerySyntaxError::QuerySyntaxError(std::size_t position,
                                   const std::string &message)
    : Error(ErrorKind::kQuerySyntax,
            "at position " + std::to_string(position) + ": " + message),
      position_(position) {}

}  // namespace epicorpus
