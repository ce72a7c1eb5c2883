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

#ifndef EPICORPUS_INGEST_PIPELINE_H_
#define EPICORPUS_INGEST_PIPELINE_H_

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "epicorpus/corpus/corpus_io.h"
#include "epicorpus/corpus/model.h"
#include "epicorpus/geo/gazetteer.h"
#include "epicorpus/ner/lexicon.h"
#include "epicorpus/pipeline/hyphenation.h"
#include "epicorpus/pipeline/pos_tagger.h"

namespace epicorpus {

struct PipelineOptions {
  bool repair_hyphenation = true;
  bool apply_corrections = true;  // manual Note-field corrections
  bool annotate_entities = true;
  bool resolve_locations = true;
  const Vocabulary *vocabulary = &Vocabulary::Default();
  const EntityLexicon *lexicon = &EntityLexicon::Default();
  const Gazetteer *gazetteer = &Gazetteer::Default();
  const PosLexicon *pos_lexicon = &PosLexicon::Default();
};

// Turns one raw report into an annotated document:
//   1. manual standoff annotations are read against the raw text and the
//      ALTO word boxes are aligned to it;
//   2. broken words are repaired and every offset follows the repair;
//   3. manual corrections replace the text they annotate;
//   4. tokens, sentences and coarse POS tags are computed on the result;
//   5. automatic entities are merged in and locations geo-resolved.
// Word boxes are aligned before any rewriting because they carry the raw
// OCR forms.
AnnotatedDocument RunPipeline(const RawDocument &raw,
                              const PipelineOptions &options = {});

// Adds tokens, sentences and POS tags when the document has none.
void EnsureTokenized(AnnotatedDocument &doc,
                     const PosLexicon &pos_lexicon = PosLexicon::Default());

struct PipelineOutcome {
  std::string doc_id;  // or the source path when loading failed
  std::optional<AnnotatedDocument> doc;
  std::string error_kind;  // empty on success
  std::string error;
};

// Loads and processes every document under `corpus_dir` on `jobs`
// threads. Outcomes come back in directory order whatever the schedule.
std::vector<PipelineOutcome> RunPipelineOnCorpus(
    const std::filesystem::path &corpus_dir, const PipelineOptions &options,
    unsigned jobs);

// Runs fn(i) for i in [0, count) on up to `jobs` threads.
void ParallelFor(std::size_t count, unsigned jobs,
                 const std::function<void(std::size_t)> &fn);

}  // namespace epicorpus

#endif  // EPICORPUS_INGEST_PIPELINE_H_
