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

#include "epicorpus/analytics/frequency.h"

#include <algorithm>
#include <map>

#include "epicorpus/ingest/pipeline.h"

namespace epicorpus {

namespace {

// Runs fn over the tokens of each document, tokenizing copies of documents
// that arrive without tokens.
template <typename Result, typename Fn>
std::vector<Result> PerDocument(const std::vector<AnnotatedDocument> &docs,
                                unsigned jobs, Fn fn) {
  std::vector<Result> out(docs.size());
  ParallelFor(docs.size(), jobs, [&](std::size_t i) {
    if (docs[i].tokens.empty() && !docs[i].text.empty()) {
      AnnotatedDocument copy;
      copy.text = docs[i].text;
      EnsureTokenized(copy);
      out[i] = fn(copy.tokens);
    } else {
      out[i] = fn(docs[i].tokens);
    }
  });
  return out;
}

}  // namespace

std::vector<TermCount> PatternCounts(const std::vector<AnnotatedDocument> &docs,
                                     Pos pos, const std::set<std::string> &targets,
                                     unsigned jobs) {
  using Counts = std::map<std::string, std::size_t>;
  auto parts = PerDocument<Counts>(docs, jobs, [&](const std::vector<Token> &tokens) {
    Counts counts;
    for (std::size_t i = 0; i + 1 < tokens.size(); ++i) {
      if (tokens[i].pos == pos && targets.count(tokens[i + 1].lower)) {
        ++counts[tokens[i].lower];
      }
    }
    return counts;
  });
  Counts merged;
  for (const Counts &part : parts) {
    for (const auto &[term, n] : part) merged[term] += n;
  }
  std::vector<TermCount> out;
  for (const auto &[term, n] : merged) out.push_back({term, n});
  std::stable_sort(out.begin(), out.end(), [](const TermCount &a, const TermCount &b) {
    return a.count > b.count;
  });
  return out;
}

MentionRatio CountMentionRatio(const std::vector<AnnotatedDocument> &docs,
                               const std::set<std::string> &set_a,
                               const std::set<std::string> &set_b,
                               unsigned jobs) {
  using Pair = std::pair<std::size_t, std::size_t>;
  auto parts = PerDocument<Pair>(docs, jobs, [&](const std::vector<Token> &tokens) {
    Pair p{0, 0};
    for (const Token &t : tokens) {
      p.first += set_a.count(t.lower);
      p.second += set_b.count(t.lower);
    }
    return p;
  });
  MentionRatio r;
  for (const Pair &p : parts) {
    r.count_a += p.first;
    r.count_b += p.second;
  }
  if (r.count_b > 0) {
    r.ratio = static_cast<double>(r.count_a) / static_cast<double>(r.count_b);
  }
  return r;
}

}  // namespace epicorpus
