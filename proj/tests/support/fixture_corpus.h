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

#ifndef EPICORPUS_TESTS_SUPPORT_FIXTURE_CORPUS_H_
#define EPICORPUS_TESTS_SUPPORT_FIXTURE_CORPUS_H_

#include <memory>
#include <string>
#include <vector>

#include "epicorpus/common/error.h"
#include "epicorpus/index/index.h"
#include "epicorpus/ingest/pipeline.h"

namespace epicorpus::testing {

inline const std::string kFixtureCorpusDir = EPICORPUS_FIXTURES "/corpus";

// The three-report fixture corpus run through the default pipeline.
inline std::vector<AnnotatedDocument> ProcessFixtureCorpus() {
  std::vector<AnnotatedDocument> docs;
  for (PipelineOutcome &o : RunPipelineOnCorpus(kFixtureCorpusDir, {}, 1)) {
    if (!o.doc) {
      throw Error(ErrorKind::kValidation, o.doc_id + ": " + o.error);
    }
    docs.push_back(std::move(*o.doc));
  }
  return docs;
}

inline std::shared_ptr<const CorpusIndex> BuildFixtureIndex(
    const IndexOptions &options = {}) {
  static const std::vector<AnnotatedDocument> docs = ProcessFixtureCorpus();
  return BuildIndex(docs, options);
}

}  // namespace epicorpus::testing

#endif  // EPICORPUS_TESTS_SUPPORT_FIXTURE_CORPUS_H_
