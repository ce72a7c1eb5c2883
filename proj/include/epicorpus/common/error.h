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

#ifndef EPICORPUS_COMMON_ERROR_H_
#define EPICORPUS_COMMON_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace epicorpus {

// Error classes. The CLI prints the class name as the first field of its
// one-line error report, so the names are part of the external interface.
enum class ErrorKind {
  kIo,
  kParse,
  kConflict,
  kValidation,
  kOutOfBounds,
  kUnknownLabel,
  kMissingReference,
  kAlignment,
  kEmptySelection,
  kInvalidArgument,
  kQuerySyntax,
  kNotFound,
};

std::string_view ErrorKindName(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string &message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Parse error carrying a 1-based line number (0 when not line-oriented).
class ParseError : public Error {
 public:
  ParseError(const std::string &source, std::size_t line,
             const std::string &message);

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Query syntax error carrying a 0-based byte position into the query.
class QuerySyntaxError : public Error {
 public:
  QuerySyntaxError(std::size_t position, const std::string &message);

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace epicorpus

#endif  // EPICORPUS_COMMON_ERROR_H_
