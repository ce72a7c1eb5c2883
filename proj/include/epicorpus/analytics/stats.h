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

#ifndef EPICORPUS_ANALYTICS_STATS_H_
#define EPICORPUS_ANALYTICS_STATS_H_

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "epicorpus/corpus/model.h"

namespace epicorpus {

struct DocumentCounts {
  std::string doc_id;
  std::size_t sentences = 0;
  std::size_t words = 0;  // tokens other than punctuation
};

struct CountSummary {
  std::size_t min = 0;
  std::size_t max = 0;
  double mean = 0;
  double stddev = 0;  // population
};

// Word-count buckets: <= 5,000; 5,001-10,000; 10,001-99,999; >= 100,000.
inline constexpr std::size_t kWordBucketCount = 4;
inline constexpr const char *kWordBucketNames[kWordBucketCount] = {
    "<=5K", "5K-10K", "10K-100K", ">=100K"};
std::size_t WordCountBucket(std::size_t words);

struct CorpusStats {
  std::vector<DocumentCounts> documents;  // input order
  std::size_t total_sentences = 0;
  std::size_t total_words = 0;
  CountSummary sentences;
  CountSummary words;
  std::array<std::size_t, kWordBucketCount> histogram{};
};

// Counts one document, tokenizing a copy when it has no tokens.
DocumentCounts CountDocument(const AnnotatedDocument &doc);

// Per-document counts on `jobs` threads, then aggregates. All zeros for an
// empty corpus.
CorpusStats ComputeCorpusStats(const std::vector<AnnotatedDocument> &docs,
                               unsigned jobs = 1);

}  // namespace epicorpus

#endif  // EPICORPUS_ANALYTICS_STATS_H_
