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

#include "epicorpus/analytics/lda.h"

#include <algorithm>
#include <random>

#include "epicorpus/common/error.h"
#include "epicorpus/common/resources.h"
#include "epicorpus/common/text_util.h"
#include "epicorpus/ingest/pipeline.h"
#include "epicorpus/pipeline/tokenizer.h"

namespace epicorpus {

namespace {

std::string DescribeSelection(const LdaSelection &s) {
  return "zone '" + s.zone_label + "', years " + std::to_string(s.year_from) +
         "-" + std::to_string(s.year_to);
}

// Uniform double in [0, 1) from the top 53 bits of one draw.
double Unit(std::mt19937_64 &rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

const std::set<std::string> &DefaultStopwords() {
  static const std::set<std::string> *words = [] {
    auto list = ParseWordList(EmbeddedResource("stopwords.txt"));
    auto *set = new std::set<std::string>();
    for (const std::string &w : list) set->insert(ToLower(w));
    return set;
  }();
  return *words;
}

std::vector<BagOfWords> PrepareLdaBags(const std::vector<AnnotatedDocument> &docs,
                                       const LdaSelection &selection,
                                       const std::set<std::string> &stopwords,
                                       const Vocabulary &dictionary) {
  std::vector<BagOfWords> bags;
  std::size_t in_years = 0;
  for (const AnnotatedDocument &source : docs) {
    int year = source.metadata.publication_year;
    if (year < selection.year_from || year > selection.year_to) continue;
    ++in_years;
    std::vector<Span> zones;
    for (const ZoneAnnotation &z : source.zones) {
      if (z.label == selection.zone_label) zones.push_back(z.span);
    }
    std::sort(zones.begin(), zones.end(), [](const Span &a, const Span &b) {
      return a.start != b.start ? a.start < b.start : a.end > b.end;
    });
    std::vector<Span> outermost;
    for (const Span &z : zones) {
      if (outermost.empty() || z.start >= outermost.back().end) {
        outermost.push_back(z);
      }
    }
    if (outermost.empty()) continue;

    const std::vector<Token> *tokens = &source.tokens;
    AnnotatedDocument copy;
    if (tokens->empty()) {
      copy.text = source.text;
      EnsureTokenized(copy);
      tokens = &copy.tokens;
    }
    for (const Span &zone : outermost) {
      BagOfWords bag;
      bag.doc_id = source.metadata.doc_id;
      bag.zone = zone;
      for (const Token &t : *tokens) {
        if (t.span.start < zone.start || t.span.end > zone.end) continue;
        if (IsPunctuationToken(t) || stopwords.count(t.lower)) continue;
        if (!dictionary.ContainsWordForm(t.lower)) continue;
        ++bag.counts[t.lower];
      }
      bags.push_back(std::move(bag));
    }
  }
  if (bags.empty()) {
    std::string why = in_years == 0
                          ? "no document was published in the year range"
                          : "none of the " + std::to_string(in_years) +
                                " documents in the year range has such a zone";
    throw Error(ErrorKind::kEmptySelection,
                "empty selection for " + DescribeSelection(selection) + ": " + why);
  }
  return bags;
}

std::vector<double> TopicModel::TopicDistribution(int topic) const {
  const double v = static_cast<double>(vocabulary.size());
  const double denominator = topic_totals[topic] + v * beta;
  std::vector<double> out(vocabulary.size());
  for (std::size_t w = 0; w < vocabulary.size(); ++w) {
    out[w] = (word_topic[topic][w] + beta) / denominator;
  }
  return out;
}

TopicModel TrainLda(const std::vector<BagOfWords> &bags, const LdaParams &params,
                    const GibbsObserver &observer) {
  if (params.topics < 2) {
    throw Error(ErrorKind::kInvalidArgument, "topic models need at least 2 topics");
  }
  if (params.iterations < 0 || params.beta <= 0 ||
      (params.alpha && *params.alpha <= 0)) {
    throw Error(ErrorKind::kInvalidArgument,
                "iterations must be >= 0 and alpha, beta positive");
  }
  TopicModel m;
  m.topics = params.topics;
  m.alpha = params.alpha ? *params.alpha : 50.0 / params.topics;
  m.beta = params.beta;
  m.seed = params.seed;
  m.iterations = params.iterations;

  std::set<std::string> words;
  for (const BagOfWords &bag : bags) {
    for (const auto &entry : bag.counts) {
      if (entry.second > 0) words.insert(entry.first);
    }
  }
  m.vocabulary.assign(words.begin(), words.end());
  if (m.vocabulary.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "the bags of words hold no tokens");
  }
  if (static_cast<std::size_t>(m.topics) > m.vocabulary.size()) {
    throw Error(ErrorKind::kInvalidArgument,
                std::to_string(m.topics) + " topics exceed the vocabulary of " +
                    std::to_string(m.vocabulary.size()) + " words");
  }

  // Token streams: bag order, then word order, repeated by count.
  std::vector<std::vector<std::uint32_t>> docs(bags.size());
  for (std::size_t d = 0; d < bags.size(); ++d) {
    for (const auto &[word, n] : bags[d].counts) {
      auto w = static_cast<std::uint32_t>(
          std::lower_bound(m.vocabulary.begin(), m.vocabulary.end(), word) -
          m.vocabulary.begin());
      docs[d].insert(docs[d].end(), n, w);
    }
  }

  const auto K = static_cast<std::size_t>(m.topics);
  const std::size_t V = m.vocabulary.size();
  m.word_topic.assign(K, std::vector<std::uint32_t>(V, 0));
  m.topic_totals.assign(K, 0);
  m.doc_topic.assign(docs.size(), std::vector<std::uint32_t>(K, 0));

  std::mt19937_64 rng(params.seed);
  std::vector<std::vector<std::uint32_t>> z(docs.size());
  for (std::size_t d = 0; d < docs.size(); ++d) {
    z[d].resize(docs[d].size());
    for (std::size_t i = 0; i < docs[d].size(); ++i) {
      auto k = std::min(K - 1, static_cast<std::size_t>(Unit(rng) * K));
      z[d][i] = static_cast<std::uint32_t>(k);
      ++m.word_topic[k][docs[d][i]];
      ++m.topic_totals[k];
      ++m.doc_topic[d][k];
    }
  }
  if (observer) observer(0, m);

  const double v_beta = static_cast<double>(V) * m.beta;
  std::vector<double> cumulative(K);
  for (int iteration = 1; iteration <= params.iterations; ++iteration) {
    for (std::size_t d = 0; d < docs.size(); ++d) {
      for (std::size_t i = 0; i < docs[d].size(); ++i) {
        const std::uint32_t w = docs[d][i];
        std::uint32_t k = z[d][i];
        --m.word_topic[k][w];
        --m.topic_totals[k];
        --m.doc_topic[d][k];
        double total = 0;
        for (std::size_t t = 0; t < K; ++t) {
          total += (m.doc_topic[d][t] + m.alpha) * (m.word_topic[t][w] + m.beta) /
                   (m.topic_totals[t] + v_beta);
          cumulative[t] = total;
        }
        const double u = Unit(rng) * total;
        k = static_cast<std::uint32_t>(
            std::upper_bound(cumulative.begin(), cumulative.end(), u) -
            cumulative.begin());
        if (k >= K) k = static_cast<std::uint32_t>(K - 1);
        z[d][i] = k;
        ++m.word_topic[k][w];
        ++m.topic_totals[k];
        ++m.doc_topic[d][k];
      }
    }
    if (observer) observer(iteration, m);
  }
  return m;
}

std::vector<WeightedWord> TopWords(const TopicModel &model, int topic,
                                   std::size_t n) {
  if (topic < 0 || topic >= model.topics) {
    throw Error(ErrorKind::kInvalidArgument,
                "topic " + std::to_string(topic) + " out of range");
  }
  std::vector<double> p = model.TopicDistribution(topic);
  std::vector<std::size_t> order(p.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  // The vocabulary is sorted, so a stable sort on weight breaks ties
  // alphabetically.
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return p[a] > p[b]; });
  std::vector<WeightedWord> out;
  for (std::size_t i = 0; i < std::min(n, order.size()); ++i) {
    out.push_back({model.vocabulary[order[i]], p[order[i]]});
  }
  return out;
}

}  // namespace epicorpus
