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

#ifndef EPICORPUS_CORPUS_SPAN_H_
#define EPICORPUS_CORPUS_SPAN_H_

#include <compare>
#include <cstddef>
#include <string_view>

namespace epicorpus {

// Half-open byte interval [start, end) into a document's corrected text.
struct Span {
  std::size_t start = 0;
  std::size_t end = 0;

  std::size_t length() const { return end - start; }
  bool valid_for(std::size_t text_size) const {
    return start < end && end <= text_size;
  }
  bool contains(std::size_t offset) const {
    return offset >= start && offset < end;
  }
  std::string_view text_of(std::string_view text) const {
    return text.substr(start, end - start);
  }

  auto operator<=>(const Span &) const = default;
};

enum class SpanRelation {
  kDisjoint,
  kAContainsB,
  kBContainsA,
  kEqual,
  kPartialOverlap,
};

std::string_view SpanRelationName(SpanRelation relation);

SpanRelation RelateSpans(const Span &a, const Span &b);

inline bool Overlaps(const Span &a, const Span &b) {
  return a.start < b.end && b.start < a.end;
}

}  // namespace epicorpus

#endif  // EPICORPUS_CORPUS_SPAN_H_
