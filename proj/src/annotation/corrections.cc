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

#include "epicorpus/annotation/corrections.h"

#include <algorithm>

#include "epicorpus/common/error.h"

namespace epicorpus {

namespace {

Span Remap(const Span &span, const OffsetMap &map) {
  return Span{map.Map(span.start), map.Map(span.end)};
}

}  // namespace

void RemapDocument(AnnotatedDocument &doc, const OffsetMap &map,
                   std::string new_text) {
  doc.text = std::move(new_text);
  doc.tokens.clear();
  doc.sentences.clear();
  for (ZoneAnnotation &zone : doc.zones) zone.span = Remap(zone.span, map);
  for (EntityAnnotation &e : doc.entities) {
    e.span = Remap(e.span, map);
    e.surface = std::string(e.span.text_of(doc.text));
  }
  for (PageWordBox &box : doc.word_boxes) {
    if (!box.char_span) continue;
    box.char_span = Remap(*box.char_span, map);
    if (box.char_span->length() == 0) box.char_span.reset();
  }
}

CorrectedDocument ApplyCorrections(const AnnotatedDocument &doc) {
  std::vector<const EntityAnnotation *> edits;
  for (const EntityAnnotation &e : doc.entities) {
    if (!e.corrected) continue;
    if (!e.span.valid_for(doc.text.size())) {
      throw Error(ErrorKind::kOutOfBounds,
                  "corrected entity '" + e.surface + "' has an invalid span");
    }
    edits.push_back(&e);
  }
  std::sort(edits.begin(), edits.end(),
            [](const EntityAnnotation *a, const EntityAnnotation *b) {
              return a->span < b->span;
            });
  for (std::size_t i = 1; i < edits.size(); ++i) {
    const Span &prev = edits[i - 1]->span;
    const Span &cur = edits[i]->span;
    if (prev.end > cur.start || prev == cur) {
      throw Error(ErrorKind::kConflict,
                  "overlapping corrections '" + edits[i - 1]->surface +
                      "' and '" + edits[i]->surface + "'");
    }
  }

  OffsetMap::Builder builder;
  std::string text;
  text.reserve(doc.text.size());
  std::size_t pos = 0;
  for (const EntityAnnotation *e : edits) {
    builder.Copy(e->span.start - pos);
    text.append(doc.text, pos, e->span.start - pos);
    builder.Replace(e->span.length(), e->corrected->size());
    text += *e->corrected;
    pos = e->span.end;
  }
  builder.Copy(doc.text.size() - pos);
  text.append(doc.text, pos, std::string::npos);

  CorrectedDocument out{doc, std::move(builder).Finish()};
  RemapDocument(out.doc, out.map, std::move(text));
  for (EntityAnnotation &e : out.doc.entities) e.corrected.reset();
  return out;
}

}  // namespace epicorpus
