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

#ifndef EPICORPUS_ANNOTATION_STANDOFF_H_
#define EPICORPUS_ANNOTATION_STANDOFF_H_

#include <string>
#include <string_view>

#include "epicorpus/corpus/model.h"

namespace epicorpus {

// Brat-compatible standoff annotations (.ann next to a .txt).
//
//   T1<TAB>causes 120 980<TAB>text          zone (label from the schema)
//   T2<TAB>date-range 10 23<TAB>Mareh to June
//                                           entity (label is an entity type)
//   A1<TAB>Page T1 12                       zone page number
//   A2<TAB>Normalized T2 interval:1897-03..1897-06
//   A3<TAB>Normalized T2 unnormalizable     or "relative"
//   A4<TAB>Automatic T2                     provenance (manual otherwise)
//   A5<TAB>Geo T2 19.07283,72.88261,1       resolved coordinates and id
//   #1<TAB>AnnotatorNotes T2<TAB>March to June
//                                           the corrected form
//
// Offsets are byte offsets into the UTF-8 text, end-exclusive. R, E, N and
// M lines are accepted and ignored, as are notes on zones and attributes
// with other names.

// Returns a document holding `text` plus the parsed zones and entities,
// both in canonical sort order. Entity surfaces are read from `text`.
// Throws on malformed lines (parse_error), offsets outside the text
// (out_of_bounds), labels that are neither zones nor entity types
// (unknown_label) and attributes or notes naming a missing T id
// (missing_reference).
AnnotatedDocument ParseStandoff(std::string_view text, std::string_view ann,
                                const std::string &source = "<ann>");

// Inverse of ParseStandoff: zones first, then entities, each in canonical
// sort order; each T line is followed by its attributes and note. Newlines
// and tabs in the quoted text are written as spaces.
std::string EmitStandoff(const AnnotatedDocument &doc);

}  // namespace epicorpus

#endif  // EPICORPUS_ANNOTATION_STANDOFF_H_
