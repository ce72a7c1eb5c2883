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

#ifndef EPICORPUS_TESTS_SUPPORT_GENERATORS_H_
#define EPICORPUS_TESTS_SUPPORT_GENERATORS_H_

// Hand-rolled generators and oracles shared by the property tests and the
// acceptance suite.

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "epicorpus/analytics/lda.h"
#include "epicorpus/corpus/model.h"

namespace epicorpus::testing {

inline int Pick(std::mt19937 &rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// ---- annotated documents that survive the standoff format ----

inline NormalizedValue RandomValue(std::mt19937 &rng) {
  auto point = [&]() {
    switch (Pick(rng, 0, 2)) {
      case 0:
        return CalendarPoint::Year(Pick(rng, 1850, 1960));
      case 1:
        return CalendarPoint::Month(Pick(rng, 1850, 1960), Pick(rng, 1, 12));
      default:
        return CalendarPoint::Day(Pick(rng, 1850, 1960), Pick(rng, 1, 12),
                                  Pick(rng, 1, 28));
    }
  };
  switch (Pick(rng, 0, 5)) {
    case 0:
      return point();
    case 1: {
      CalendarInterval iv;
      int shape = Pick(rng, 0, 2);
      if (shape != 1) iv.start = point(); else iv.open_start = true;
      if (shape != 2) iv.end = point(); else iv.open_end = true;
      return iv;
    }
    case 2:
      return ClockTime{Pick(rng, 0, 23), Pick(rng, 0, 59)};
    case 3:
      return Duration{Pick(rng, 1, 40) / 2.0,
                      static_cast<DurationUnit>(Pick(rng, 0, 4))};
    case 4:
      return Length{Pick(rng, 1, 100000) / 8.0};
    default:
      return Percentage{Pick(rng, 0, 1000) / 10.0};
  }
}

inline std::string RandomWord(std::mt19937 &rng, bool allow_space) {
  static const std::string kChars = "abcdefgh XYZ.,'-\xc3\xa9";
  std::string out;
  for (int i = Pick(rng, 0, 12); i > 0; --i) {
    char c = kChars[static_cast<std::size_t>(
        Pick(rng, 0, static_cast<int>(kChars.size()) - 1))];
    if (c == ' ' && !allow_space) c = '_';
    out += c;
  }
  return out;
}

inline AnnotatedDocument RandomDocument(std::mt19937 &rng) {
  AnnotatedDocument doc;
  static const std::string kTextChars = "abc de\n\tXY.,";
  int n = Pick(rng, 0, 300);
  for (int i = 0; i < n; ++i) {
    doc.text += kTextChars[static_cast<std::size_t>(
        Pick(rng, 0, static_cast<int>(kTextChars.size()) - 1))];
  }
  auto span = [&]() {
    std::size_t a = static_cast<std::size_t>(Pick(rng, 0, n));
    std::size_t b = static_cast<std::size_t>(Pick(rng, 0, n));
    return Span{std::min(a, b), std::max(a, b)};
  };
  const auto &labels = ZoneSchema::Default().labels();
  for (int i = Pick(rng, 0, 5); i > 0; --i) {
    ZoneAnnotation z;
    z.label = labels[static_cast<std::size_t>(
        Pick(rng, 0, static_cast<int>(labels.size()) - 1))];
    z.span = span();
    if (Pick(rng, 0, 1)) z.page_number = Pick(rng, 1, 400);
    doc.zones.push_back(z);
  }
  for (int i = Pick(rng, 0, 8); i > 0; --i) {
    EntityAnnotation e;
    e.type = kAllEntityTypes[static_cast<std::size_t>(Pick(rng, 0, 10))];
    e.span = span();
    e.surface = std::string(e.span.text_of(doc.text));
    if (Pick(rng, 0, 2) == 0) e.corrected = RandomWord(rng, true);
    if (Pick(rng, 0, 1)) e.normalized = RandomValue(rng);
    e.flag = static_cast<NormFlag>(Pick(rng, 0, 2));
    e.provenance = Pick(rng, 0, 1) ? Provenance::kManual : Provenance::kAutomatic;
    if (Pick(rng, 0, 3) == 0) {
      e.geo = GeoPoint{Pick(rng, -9000, 9000) / 100.0,
                       Pick(rng, -18000, 18000) / 100.0, Pick(rng, 1, 1000000)};
    }
    doc.entities.push_back(e);
  }
  SortZones(doc.zones);
  SortEntities(doc.entities);
  return doc;
}

// ---- edit distance ----

inline int Levenshtein(const std::u32string &a, const std::u32string &b) {
  std::vector<std::vector<int>> d(a.size() + 1, std::vector<int>(b.size() + 1));
  for (std::size_t i = 0; i <= a.size(); ++i) d[i][0] = static_cast<int>(i);
  for (std::size_t j = 0; j <= b.size(); ++j) d[0][j] = static_cast<int>(j);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      d[i][j] = std::min({d[i - 1][j] + 1, d[i][j - 1] + 1,
                          d[i - 1][j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1)});
    }
  }
  return d[a.size()][b.size()];
}

struct FuzzyCase {
  std::string term;
  int edits = 0;
  std::vector<std::string> vocabulary;
};

// Short words over a small alphabet with two-byte letters, so edits within
// two are common and byte and code point distances differ.
inline FuzzyCase RandomFuzzyCase(std::mt19937 &rng) {
  static const std::vector<std::string> kAlphabet = {
      "a", "b", "c", "e", "l", "p", "\xC3\xA9", "\xC3\xBC"};
  auto word = [&](int max_len) {
    std::string w;
    for (int i = Pick(rng, 1, max_len); i > 0; --i) {
      w += kAlphabet[static_cast<std::size_t>(
          Pick(rng, 0, static_cast<int>(kAlphabet.size()) - 1))];
    }
    return w;
  };
  FuzzyCase c;
  for (int i = Pick(rng, 0, 499); i > 0; --i) c.vocabulary.push_back(word(12));
  c.term = word(12);
  c.edits = Pick(rng, 0, 2);
  return c;
}

// ---- a corpus with two disjoint vocabularies ----

inline const std::vector<std::string> kFruitWords = {
    "apple", "banana", "cherry", "grape", "lemon",
    "mango", "melon",  "peach",  "pear",  "plum"};
inline const std::vector<std::string> kVerminWords = {
    "rat",   "flea",  "ship",  "port", "grain",
    "sewer", "drain", "house", "dust", "soil"};

// Twenty documents of fifty words from each vocabulary.
inline std::vector<BagOfWords> SeparableCorpus() {
  std::mt19937 rng(99);
  std::vector<BagOfWords> bags;
  for (const auto *vocab : {&kFruitWords, &kVerminWords}) {
    for (int d = 0; d < 20; ++d) {
      BagOfWords bag;
      bag.doc_id = std::to_string(bags.size());
      for (int i = 0; i < 50; ++i) ++bag.counts[(*vocab)[rng() % vocab->size()]];
      bags.push_back(bag);
    }
  }
  return bags;
}

inline bool FromOneVocabulary(const std::vector<WeightedWord> &top) {
  auto in = [&](const std::vector<std::string> &vocab) {
    return std::all_of(top.begin(), top.end(), [&](const WeightedWord &w) {
      return std::find(vocab.begin(), vocab.end(), w.word) != vocab.end();
    });
  };
  return in(kFruitWords) || in(kVerminWords);
}

}  // namespace epicorpus::testing

#endif  // EPICORPUS_TESTS_SUPPORT_GENERATORS_H_
