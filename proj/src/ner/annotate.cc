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

#include "epicorpus/ner/annotate.h"

#include <algorithm>
#include <tuple>

#include "epicorpus/ner/measurements.h"
#include "epicorpus/ner/temporal.h"
#include "epicorpus/pipeline/tokenizer.h"

namespace epicorpus {

namespace {

bool WithinOneSentence(const Span &span,
                       const std::vector<Sentence> &sentences) {
  if (sentences.empty()) return true;
  auto it = std::upper_bound(
      sentences.begin(), sentences.end(), span.start,
      [](std::size_t offset, const Sentence &s) { return offset < s.span.start; });
  if (it == sentences.begin()) return false;
  --it;
  return span.start >= it->span.start && span.end <= it->span.end;
}

bool IsCalendarType(EntityType type) {
  return type == EntityType::kDate || type == EntityType::kDateRange;
}

bool Compatible(EntityType wanted, EntityType found) {
  if (IsCalendarType(wanted)) return IsCalendarType(found);
  return wanted == found;
}

}  // namespace

std::optional<EntityAnnotation> RecognizeMention(std::string_view mention,
                                                 int pub_year) {
  std::vector<Token> tokens = Tokenize(mention);
  if (tokens.empty()) return std::nullopt;
  const Span whole{tokens.front().span.start, tokens.back().span.end};
  for (auto &found : {RecognizeTemporal(mention, tokens, pub_year),
                      RecognizeMeasurements(mention, tokens)}) {
    for (const EntityAnnotation &e : found) {
      if (e.span == whole) return e;
    }
  }
  return std::nullopt;
}

void NormalizeEntities(AnnotatedDocument &doc) {
  for (EntityAnnotation &e : doc.entities) {
    if (!RequiresNormalization(e.type) || e.normalized ||
        e.flag != NormFlag::kNone) {
      continue;
    }
    auto read = RecognizeMention(e.effective_form(),
                                 doc.metadata.publication_year);
    if (read && Compatible(e.type, read->type) &&
        (read->normalized || read->flag != NormFlag::kNone)) {
      e.normalized = read->normalized;
      e.flag = read->flag;
    } else {
      e.flag = NormFlag::kUnnormalizable;
    }
  }
}

void AnnotateEntities(AnnotatedDocument &doc, const EntityLexicon &lexicon) {
  std::vector<EntityAnnotation> candidates = doc.entities;
  auto append = [&](std::vector<EntityAnnotation> found) {
    for (EntityAnnotation &e : found) {
      if (WithinOneSentence(e.span, doc.sentences)) {
        candidates.push_back(std::move(e));
      }
    }
  };
  append(MatchLexiconEntities(doc.text, doc.tokens, lexicon));
  append(RecognizeTemporal(doc.text, doc.tokens,
                           doc.metadata.publication_year));
  append(RecognizeMeasurements(doc.text, doc.tokens));

  auto rank = [](const EntityAnnotation &e) {
    return std::make_tuple(e.provenance == Provenance::kManual ? 0 : 1,
                           -static_cast<long long>(e.span.length()),
                           e.span.start, static_cast<int>(e.type));
  };
  std::stable_sort(candidates.begin(), candidates.end(),
                   [&](const EntityAnnotation &a, const EntityAnnotation &b) {
                     return rank(a) < rank(b);
                   });

  std::vector<EntityAnnotation> accepted;
  for (EntityAnnotation &candidate : candidates) {
    bool keep = candidate.provenance == Provenance::kManual;
    if (!keep) {
      keep = std::none_of(accepted.begin(), accepted.end(),
                          [&](const EntityAnnotation &a) {
                            return Overlaps(a.span, candidate.span);
                          });
    }
    if (keep) accepted.push_back(std::move(candidate));
  }
  doc.entities = std::move(accepted);
  SortEntities(doc.entities);
  NormalizeEntities(doc);
}

}  // namespace epicorpus
