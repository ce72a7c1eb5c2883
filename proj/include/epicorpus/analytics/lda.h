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

#ifndef EPICORPUS_ANALYTICS_LDA_H_
#define EPICORPUS_ANALYTICS_LDA_H_

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "epicorpus/corpus/model.h"
#include "epicorpus/pipeline/hyphenation.h"

namespace epicorpus {

// Which text goes into topic modelling: zones with `zone_label` in
// documents published within [year_from, year_to].
struct LdaSelection {
  std::string zone_label = "causes";
  int year_from = kMinPublicationYear;
  int year_to = kMaxPublicationYear;
};

struct BagOfWords {
  std::string doc_id;
  Span zone;  // the zone the words come from
  std::map<std::string, std::size_t> counts;
};

// The bundled English stop word list (data/stopwords.txt).
const std::set<std::string> &DefaultStopwords();

// One bag per selected zone (outermost zones only when same-label zones
// nest). Keeps lowercased tokens that are not stop words and that the
// dictionary knows, allowing regular inflections. Throws
// Error(kEmptySelection) naming the filter when no zone is selected.
std::vector<BagOfWords> PrepareLdaBags(const std::vector<AnnotatedDocument> &docs,
                                       const LdaSelection &selection,
                                       const std::set<std::string> &stopwords,
                                       const Vocabulary &dictionary);

struct LdaParams {
  int topics = 2;
  int iterations = 200;
  std::optional<double> alpha;  // 50 / topics when unset
  double beta = 0.01;
  std::uint64_t seed = 1;
};

struct TopicModel {
  int topics = 0;
  double alpha = 0;
  double beta = 0;
  std::uint64_t seed = 0;
  int iterations = 0;
  std::vector<std::string> vocabulary;                    // sorted
  std::vector<std::vector<std::uint32_t>> word_topic;     // [topic][word]
  std::vector<std::uint32_t> topic_totals;                // [topic]
  std::vector<std::vector<std::uint32_t>> doc_topic;      // [doc][topic]

  // (n_kw + beta) / (n_k + V * beta) over the vocabulary; sums to 1.
  std::vector<double> TopicDistribution(int topic) const;
};

// Called after initialization (iteration 0) and after every sweep.
using GibbsObserver = std::function<void(int iteration, const TopicModel &)>;

// Collapsed Gibbs sampling. Each token's topic is redrawn with probability
// proportional to (n_dk + alpha)(n_kw + beta) / (n_k + V beta), its own
// assignment removed from the counts. Draws come from mt19937_64 seeded
// with `seed`, turned into doubles by bit arithmetic, so a seed fixes the
// whole trajectory. Throws Error(kInvalidArgument) when topics < 2, the
// bags hold no tokens, or topics exceed the vocabulary size.
TopicModel TrainLda(const std::vector<BagOfWords> &bags, const LdaParams &params,
                    const GibbsObserver &observer = {});

struct WeightedWord {
  std::string word;
  double weight = 0;
};

// Highest-probability words of `topic`, ties broken alphabetically.
std::vector<WeightedWord> TopWords(const TopicModel &model, int topic,
                                   std::size_t n);

}  // namespace epicorpus

#endif  // EPICORPUS_ANALYTICS_LDA_H_
