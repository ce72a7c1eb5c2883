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

#ifndef EPICORPUS_CORPUS_VALIDATE_H_
#define EPICORPUS_CORPUS_VALIDATE_H_

#include <string>
#include <vector>

#include "epicorpus/corpus/model.h"

namespace epicorpus {

// A single invariant violation. Messages identify annotations by label and
// span rather than by list position, so reports do not depend on the order
// annotations were supplied in.
struct Violation {
  std::string code;
  std::string message;

  auto operator<=>(const Violation &) const = default;
};

// Sorts and removes duplicates.
void CanonicalizeViolations(std::vector<Violation> &violations);

// Checks every model invariant. Returns an empty list iff the document is
// valid. Never throws on bad data.
std::vector<Violation> ValidateDocument(const AnnotatedDocument &doc);

// The two halves of ValidateDocument: the metadata checks, and everything
// about text, zones, entities, boxes, tokens and sentences.
std::vector<Violation> ValidateMetadata(const DocumentMetadata &metadata);
std::vector<Violation> ValidateAnnotations(const AnnotatedDocument &doc);

std::vector<Violation> ValidateNormalizedValue(const NormalizedValue &value);

std::string DescribeSpan(const Span &span);

}  // namespace epicorpus

#endif  // EPICORPUS_CORPUS_VALIDATE_H_
