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

#include "epicorpus/corpus/span.h"

namespace epicorpus {

std::string_view SpanRelationName(SpanRelation relation) {
  switch (relation) {
    case SpanRelation::kDisjoint: return "disjoint";
    case SpanRelation::kAContainsB: return "a-contains-b";
    case SpanRelation::kBContainsA: return "b-contains-a";
    case SpanRelation::kEqual: return "equal";
    case SpanRelation::kPartialOverlap: return "partial-overlap";
  }
  return "unknown";
}

SpanRelation RelateSpans(const Span &a, const Span &b) {
  if (a.start == b.start && a.end == b.end) return SpanRelation::kEqual;
  if (a.end <= b.start || b.end <= a.start) return SpanRelation::kDisjoint;
  if (a.start <= b.start && b.end <= a.end) return SpanRelation::kAContainsB;
  if (b.start <= a.start && a.end <= b.end) return SpanRelation::kBContainsA;
  return SpanRelation::kPartialOverlap;
}

}  // namespace epicorpus
