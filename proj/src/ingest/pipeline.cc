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

#include "epicorpus/ingest/pipeline.h"

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "epicorpus/annotation/alignment.h"
#include "epicorpus/annotation/alto.h"
#include "epicorpus/annotation/corrections.h"
#include "epicorpus/annotation/standoff.h"
#include "epicorpus/common/error.h"
#include "epicorpus/ner/annotate.h"
#include "epicorpus/pipeline/sentences.h"
#include "epicorpus/pipeline/tokenizer.h"

namespace epicorpus {

void ParallelFor(std::size_t count, unsigned jobs,
                 const std::function<void(std::size_t)> &fn) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> threads;
  unsigned n = static_cast<unsigned>(std::min<std::size_t>(jobs, count));
  for (unsigned t = 0; t < n; ++t) threads.emplace_back(worker);
  for (std::thread &t : threads) t.join();
  if (failure) std::rethrow_exception(failure);
}

void EnsureTokenized(AnnotatedDocument &doc, const PosLexicon &pos_lexicon) {
  if (!doc.tokens.empty() || doc.text.empty()) return;
  doc.tokens = Tokenize(doc.text);
  TagPosCoarse(doc.tokens, pos_lexicon);
  doc.sentences = SplitSentences(doc.tokens);
}

AnnotatedDocument RunPipeline(const RawDocument &raw,
                              const PipelineOptions &options) {
  AnnotatedDocument doc;
  if (raw.ann) {
    doc = ParseStandoff(raw.text, *raw.ann, raw.source + "/ann.ann");
  } else {
    doc.text = raw.text;
  }
  doc.metadata = raw.metadata;

  std::vector<PageWordBox> boxes;
  for (const auto &[page, xml] : raw.alto_pages) {
    std::vector<PageWordBox> page_boxes =
        ParseAlto(xml, page, raw.source + "/alto page " + std::to_string(page));
    boxes.insert(boxes.end(), page_boxes.begin(), page_boxes.end());
  }
  if (!boxes.empty()) doc.word_boxes = AlignTextToAlto(raw.text, boxes);

  if (options.repair_hyphenation) {
    HyphenationRepair repair = RepairHyphenation(doc.text, *options.vocabulary);
    if (repair.text != doc.text) {
      RemapDocument(doc, repair.map, std::move(repair.text));
    }
  }
  if (options.apply_corrections) doc = ApplyCorrections(doc).doc;

  doc.tokens.clear();
  EnsureTokenized(doc, *options.pos_lexicon);
  if (options.annotate_entities) {
    AnnotateEntities(doc, *options.lexicon);
  } else {
    SortEntities(doc.entities);
  }
  if (options.resolve_locations) {
    ResolveDocumentLocations(doc, *options.gazetteer);
  }
  SortZones(doc.zones);
  return doc;
}

std::vector<PipelineOutcome> RunPipelineOnCorpus(
    const std::filesystem::path &corpus_dir, const PipelineOptions &options,
    unsigned jobs) {
  std::vector<std::filesystem::path> dirs = ListCorpusDocuments(corpus_dir);
  std::vector<PipelineOutcome> outcomes(dirs.size());
  ParallelFor(dirs.size(), jobs, [&](std::size_t i) {
    PipelineOutcome &out = outcomes[i];
    out.doc_id = dirs[i].filename().string();
    try {
      RawDocument raw = LoadRawDocument(dirs[i]);
      out.doc = RunPipeline(raw, options);
    } catch (const Error &e) {
      out.error_kind = std::string(ErrorKindName(e.kind()));
      out.error = e.what();
    } catch (const std::exception &e) {
      out.error_kind = "internal_error";
      out.error = e.what();
    }
  });
  return outcomes;
}

}  // namespace epicorpus
