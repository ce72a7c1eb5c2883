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

#ifndef EPICORPUS_ANNOTATION_CORRECTIONS_H_
#define EPICORPUS_ANNOTATION_CORRECTIONS_H_

#include "epicorpus/common/offset_map.h"
#include "epicorpus/corpus/model.h"

namespace epicorpus {

struct CorrectedDocument {
  AnnotatedDocument doc;
  OffsetMap map;  // old text offsets to new
};

// Moves zone, entity and word-box offsets through `map` and installs
// `new_text`. Entity surfaces are re-read; word boxes whose span collapses
// lose their char_span. Tokens and sentences are dropped.
void RemapDocument(AnnotatedDocument &doc, const OffsetMap &map,
                   std::string new_text);

// Substitutes every entity's corrected form for its surface in the text and
// remaps zone, entity and word-box offsets through the resulting map.
// Entity surfaces are re-read from the new text and the applied corrections
// are cleared. Tokens and sentences are dropped since their offsets no
// longer hold. Throws Error(kConflict) when two corrected spans overlap.
CorrectedDocument ApplyCorrections(const AnnotatedDocument &doc);

}  // namespace epicorpus

#endif  // EPICORPUS_ANNOTATION_CORRECTIONS_H_
