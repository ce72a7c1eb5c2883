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

#include "epicorpus/analytics/stats.h"

#include <algorithm>
#include <cmath>

#include "epicorpus/ingest/pipeline.h"
#include "epicorpus/pipeline/tokenizer.h"

namespace epicorpus {

namespace {

CountSummary Summarize(const std::vector<std::size_t> &values) {
  CountSummary s;
  if (values.empty()) return s;
  s.min = *std::min_element(values.begin(), values.end());
  s.max = *std::max_element(values.begin(), values.end());
  double sum = 0;
  for (std::size_t v : values) sum += static_cast<double>(v);
  s.mean = sum / static_cast<double>(values.size());
  double squares = 0;
  for (std::size_t v : values) {
    double d = static_cast<double>(v) - s.mean;
    squares += d * d;
  }
  s.stddev = std::sqrt(squares / static_cast<double>(values.size()));
  return s;
}

}  // namespace

std::size_t WordCountBucket(std::size_t words) {
  if (words <= 5000) return 0;
  if (words <= 10000) return 1;
  if (words < 100000) return 2;
  return 3;
}

DocumentCounts CountDocument(const AnnotatedDocument &doc) {
  if (doc.tokens.empty() && !doc.text.empty()) {
    AnnotatedDocument copy;
    copy.metadata = doc.metadata;
    copy.text = doc.text;
    EnsureTokenized(copy);
    return CountDocument(copy);
  }
  DocumentCounts counts;
  counts.doc_id = doc.metadata.doc_id;
  counts.sentences = doc.sentences.size();
  counts.words = static_cast<std::size_t>(
      std::count_if(doc.tokens.begin(), doc.tokens.end(),
                    [](const Token &t) { return !IsPunctuationToken(t); }));
  return counts;
}

CorpusStats ComputeCorpusStats(const std::vector<AnnotatedDocument> &docs,
                               unsigned jobs) {
  CorpusStats stats;
  stats.documents.resize(docs.size());
  ParallelFor(docs.size(), jobs,
              [&](std::size_t i) { stats.documents[i] = CountDocument(docs[i]); });
  std::vector<std::size_t> sentences, words;
  for (const DocumentCounts &c : stats.documents) {
    stats.total_sentences += c.sentences;
    stats.total_words += c.words;
    sentences.push_back(c.sentences);
    words.push_back(c.words);
    ++stats.histogram[WordCountBucket(c.words)];
  }
  stats.sentences = Summarize(sentences);
  stats.words = Summarize(words);
  return stats;
}

}  // namespace epicorpus
