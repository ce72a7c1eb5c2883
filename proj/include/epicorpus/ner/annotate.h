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

#ifndef EPICORPUS_NER_ANNOTATE_H_
#define EPICORPUS_NER_ANNOTATE_H_

#include <optional>
#include <string_view>

#include "epicorpus/corpus/model.h"
#include "epicorpus/ner/lexicon.h"

namespace epicorpus {

// Runs the lexicon, temporal and measurement recognizers over doc.tokens
// and merges the results with the entities already on the document.
// Conflicts between overlapping entities resolve in favour of manual
// provenance, then the longer span, then the earlier start. Automatic
// candidates that cross a sentence boundary are dropped. Manual entities
// are always kept. Finishes with NormalizeEntities.
void AnnotateEntities(AnnotatedDocument &doc,
                      const EntityLexicon &lexicon = EntityLexicon::Default());

// Reads a whole mention ("March to June", "25 per cent") with the rule
// grammars. Returns the entity only when a single match covers every
// token of the mention.
std::optional<EntityAnnotation> RecognizeMention(std::string_view mention,
                                                 int pub_year);

// Fills in missing normalized values from each entity's corrected form,
// falling back to the unnormalizable flag when the grammar cannot read it
// as the entity's type.
void NormalizeEntities(AnnotatedDocument &doc);

}  // namespace epicorpus

#endif  // EPICORPUS_NER_ANNOTATE_H_
