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

#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "epicorpus/analytics/frequency.h"
#include "epicorpus/analytics/lda.h"
#include "epicorpus/analytics/stats.h"
#include "epicorpus/common/error.h"
#include "support/generators.h"

namespace epicorpus {
namespace {

AnnotatedDocument TextDoc(const std::string &id, const std::string &text,
                          int year = 1895) {
  AnnotatedDocument doc;
  doc.metadata.doc_id = id;
  doc.metadata.publication_year = year;
  doc.text = text;
  return doc;
}

// n words in sentences of five, each sentence ending in a full stop.
std::string Words(std::size_t n) {
  std::string out;
  for (std::size_t i = 0; i < n; ++i) {
    if (!out.empty()) out += ' ';
    out += "word";
    if (i % 5 == 4 || i + 1 == n) out += '.';
  }
  return out;
}

// ---- corpus statistics ----

TEST_CASE("corpus statistics on a two-document fixture") {
  CorpusStats s =
      ComputeCorpusStats({TextDoc("a", Words(40)), TextDoc("b", Words(60))});
  REQUIRE(s.documents.size() == 2);
  CHECK(s.documents[0].words == 40);
  CHECK(s.documents[1].words == 60);
  CHECK(s.documents[0].sentences == 8);
  CHECK(s.documents[1].sentences == 12);
  CHECK(s.total_words == 100);
  CHECK(s.total_sentences == 20);
  CHECK(s.words.mean == 50);
  CHECK(s.words.stddev == 10);
  CHECK(s.words.min == 40);
  CHECK(s.words.max == 60);
  CHECK(s.sentences.stddev == 2);
  CHECK(s.histogram == std::array<std::size_t, 4>{2, 0, 0, 0});
}

TEST_CASE("empty corpus statistics") {
  CorpusStats s = ComputeCorpusStats({});
  CHECK(s.documents.empty());
  CHECK(s.total_words == 0);
  CHECK(s.total_sentences == 0);
  CHECK(s.words.mean == 0);
  CHECK(s.words.stddev == 0);
  CHECK(s.histogram == std::array<std::size_t, 4>{0, 0, 0, 0});
}

TEST_CASE("word count buckets") {
  CHECK(WordCountBucket(0) == 0);
  CHECK(WordCountBucket(5000) == 0);
  CHECK(WordCountBucket(5001) == 1);
  CHECK(WordCountBucket(10000) == 1);
  CHECK(WordCountBucket(10001) == 2);
  CHECK(WordCountBucket(99999) == 2);
  CHECK(WordCountBucket(100000) == 3);
}

TEST_CASE("statistics agree with an independent computation") {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<AnnotatedDocument> docs;
    std::vector<std::size_t> counts;
    std::size_t n = 1 + rng() % 12;
    for (std::size_t d = 0; d < n; ++d) {
      counts.push_back(rng() % 300);
      docs.push_back(TextDoc("d" + std::to_string(d), Words(counts.back())));
    }
    CorpusStats s = ComputeCorpusStats(docs, 1 + trial % 3);
    // One pass over sums of powers, in long double.
    long double sum = 0, squares = 0;
    for (std::size_t c : counts) {
      sum += c;
      squares += static_cast<long double>(c) * c;
    }
    long double mean = sum / n;
    long double variance = squares / n - mean * mean;
    double stddev = static_cast<double>(std::sqrt(std::max(0.0L, variance)));
    CHECK(s.total_words == static_cast<std::size_t>(sum));
    CHECK(std::abs(s.words.mean - static_cast<double>(mean)) <=
          1e-9 * std::max(1.0, static_cast<double>(mean)));
    CHECK(std::abs(s.words.stddev - stddev) <= 1e-9 * std::max(1.0, stddev));
    CHECK(s.words.stddev >= 0);
    std::size_t sentences = 0, histogram = 0;
    for (const DocumentCounts &c : s.documents) sentences += c.sentences;
    for (std::size_t h : s.histogram) histogram += h;
    CHECK(sentences == s.total_sentences);
    CHECK(histogram == n);
  }
}

// ---- frequencies ----

TEST_CASE("adjectives before man and men") {
  auto doc = TextDoc("m",
                     "The medical man was called. A medical man and a sick man "
                     "came. Another medical man, a woman and two women saw the "
                     "old men.");
  CHECK(PatternCounts({doc}, Pos::kAdj, {"man", "men"}) ==
        std::vector<TermCount>{{"medical", 3}, {"old", 1}, {"sick", 1}});
  CHECK(PatternCounts({}, Pos::kAdj, {"man"}).empty());
}

TEST_CASE("pattern counts equal a naive scan") {
  const std::vector<std::string> words = {"medical", "sick", "man", "men",
                                          "old", "young", "woman"};
  const Pos tags[] = {Pos::kAdj, Pos::kNoun, Pos::kVerb};
  std::mt19937 rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<AnnotatedDocument> docs(1 + rng() % 5);
    std::map<std::string, std::size_t> expected;
    for (AnnotatedDocument &doc : docs) {
      std::size_t n = rng() % 40;
      std::vector<std::string> lower;
      std::vector<Pos> pos;
      for (std::size_t i = 0; i < n; ++i) {
        lower.push_back(words[rng() % words.size()]);
        pos.push_back(tags[rng() % 3]);
        Token t;
        t.span = {i, i + 1};
        t.surface = lower.back();
        t.lower = lower.back();
        t.pos = pos.back();
        doc.tokens.push_back(t);
      }
      doc.text = std::string(n, 'x');
      for (std::size_t i = 1; i < n; ++i) {
        if (pos[i - 1] == Pos::kAdj && (lower[i] == "man" || lower[i] == "men")) {
          ++expected[lower[i - 1]];
        }
      }
    }
    auto got = PatternCounts(docs, Pos::kAdj, {"man", "men"}, 1 + trial % 2);
    std::map<std::string, std::size_t> as_map;
    for (const TermCount &c : got) as_map[c.term] = c.count;
    CHECK(as_map == expected);
    for (std::size_t i = 1; i < got.size(); ++i) {
      CHECK((got[i - 1].count > got[i].count ||
             (got[i - 1].count == got[i].count && got[i - 1].term < got[i].term)));
    }
  }
}

TEST_CASE("mention ratio") {
  auto doc = TextDoc("r",
                     "A woman and the women. The man, men, Man, MEN, man, men, "
                     "man and men.");
  MentionRatio r = CountMentionRatio({doc}, {"woman", "women"}, {"man", "men"});
  CHECK(r.count_a == 2);
  CHECK(r.count_b == 8);
  REQUIRE(r.ratio);
  CHECK(*r.ratio == 0.25);

  r = CountMentionRatio({TextDoc("w", "A woman.")}, {"woman"}, {"man"});
  CHECK(r.count_a == 1);
  CHECK(r.count_b == 0);
  CHECK_FALSE(r.ratio);
}

// ---- topic modelling ----

AnnotatedDocument ZonedDoc(const std::string &id, int year, const std::string &text,
                           std::vector<ZoneAnnotation> zones) {
  AnnotatedDocument doc = TextDoc(id, text, year);
  doc.zones = std::move(zones);
  return doc;
}

TEST_CASE("bags of words from selected zones") {
  Vocabulary dictionary({"rat", "died"});
  auto doc = ZonedDoc("a", 1895, "Causes: the rat died.",
                      {{"causes", {7, 21}, std::nullopt}});
  LdaSelection selection{"causes", 1894, 1896};
  auto bags = PrepareLdaBags({doc}, selection, DefaultStopwords(), dictionary);
  REQUIRE(bags.size() == 1);
  CHECK(bags[0].counts == std::map<std::string, std::size_t>{{"died", 1}, {"rat", 1}});

  // Only the outermost of nested causes zones counts; a document without
  // the zone adds nothing.
  auto nested = ZonedDoc("b", 1894, "rat rat died",
                         {{"causes", {0, 12}, std::nullopt},
                          {"causes", {4, 12}, std::nullopt}});
  auto other = ZonedDoc("c", 1896, "rat", {{"treatment", {0, 3}, std::nullopt}});
  bags = PrepareLdaBags({doc, nested, other}, selection, DefaultStopwords(),
                        dictionary);
  REQUIRE(bags.size() == 2);
  CHECK(bags[1].doc_id == "b");
  CHECK(bags[1].counts.at("rat") == 2);

  // Inflected forms of dictionary words pass.
  auto inflected =
      ZonedDoc("d", 1895, "rats spreading", {{"causes", {0, 14}, std::nullopt}});
  bags = PrepareLdaBags({inflected}, selection, DefaultStopwords(),
                        Vocabulary({"rat", "spread"}));
  CHECK(bags[0].counts ==
        std::map<std::string, std::size_t>{{"rats", 1}, {"spreading", 1}});

  try {
    PrepareLdaBags({doc}, LdaSelection{"causes", 1900, 1910}, DefaultStopwords(),
                   dictionary);
    FAIL("empty selection accepted");
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::kEmptySelection);
    CHECK(std::string(e.what()).find("1900-1910") != std::string::npos);
    CHECK(std::string(e.what()).find("causes") != std::string::npos);
  }
  CHECK_THROWS_AS(PrepareLdaBags({other}, selection, DefaultStopwords(), dictionary),
                  Error);
  CHECK(DefaultStopwords().count("the"));
}

using testing::FromOneVocabulary;
using testing::SeparableCorpus;

TEST_CASE("topics separate a two-vocabulary corpus") {
  auto bags = SeparableCorpus();
  int separated = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    LdaParams params;
    params.seed = seed;
    TopicModel m = TrainLda(bags, params);
    CHECK(m.alpha == 25);
    separated += FromOneVocabulary(TopWords(m, 0, 5)) &&
                 FromOneVocabulary(TopWords(m, 1, 5));
  }
  CHECK(separated >= 19);
}

TEST_CASE("sampler conservation and normalization") {
  auto bags = SeparableCorpus();
  LdaParams params;
  params.topics = 3;
  params.iterations = 20;
  params.seed = 7;
  std::size_t tokens = 0;
  for (const auto &bag : bags) {
    for (const auto &entry : bag.counts) tokens += entry.second;
  }
  int calls = 0;
  bool conserved = true;
  TopicModel m = TrainLda(bags, params, [&](int iteration, const TopicModel &model) {
    conserved = conserved && iteration == calls;
    ++calls;
    std::size_t sum = 0, totals = 0;
    for (const auto &row : model.word_topic) {
      for (std::uint32_t c : row) sum += c;
    }
    for (std::uint32_t c : model.topic_totals) totals += c;
    std::size_t by_doc = 0;
    for (std::size_t d = 0; d < model.doc_topic.size(); ++d) {
      std::size_t n = 0;
      for (std::uint32_t c : model.doc_topic[d]) n += c;
      std::size_t expected = 0;
      for (const auto &entry : bags[d].counts) expected += entry.second;
      conserved = conserved && n == expected;
      by_doc += n;
    }
    // Counts are unsigned; a negative would wrap and break the sums.
    conserved = conserved && sum == tokens && totals == tokens && by_doc == tokens;
  });
  CHECK(calls == 21);
  CHECK(conserved);
  for (int k = 0; k < m.topics; ++k) {
    double sum = 0;
    for (double p : m.TopicDistribution(k)) sum += p;
    CHECK(std::abs(sum - 1.0) < 1e-9);
  }
}

TEST_CASE("training is reproducible from the seed") {
  auto bags = SeparableCorpus();
  LdaParams params;
  params.seed = 7;
  TopicModel a = TrainLda(bags, params);
  TopicModel b = TrainLda(bags, params);
  CHECK(a.word_topic == b.word_topic);
  CHECK(a.doc_topic == b.doc_topic);
  // Both runs converge to the same split, so compare starting points.
  params.iterations = 0;
  TopicModel start7 = TrainLda(bags, params);
  params.seed = 8;
  CHECK(TrainLda(bags, params).doc_topic != start7.doc_topic);
}

TEST_CASE("degenerate topic models") {
  BagOfWords single;
  single.counts = {{"w", 10}};
  BagOfWords pair;
  pair.counts = {{"w", 10}, {"v", 1}};
  LdaParams params;
  CHECK_THROWS_AS(TrainLda({single}, params), Error);  // 2 topics, 1 word
  TopicModel m = TrainLda({pair}, params);
  CHECK(TopWords(m, 0, 1)[0].word == "w");
  CHECK(TopWords(m, 1, 1)[0].word == "w");
  CHECK(TopWords(m, 0, 10).size() == 2);

  params.topics = 1;
  CHECK_THROWS_AS(TrainLda({pair}, params), Error);
  params.topics = 2;
  CHECK_THROWS_AS(TrainLda({BagOfWords{}}, params), Error);
  CHECK_THROWS_AS(TrainLda({}, params), Error);
  CHECK_THROWS_AS(TopWords(m, 2, 1), Error);
}

}  // namespace
}  // namespace epicorpus
