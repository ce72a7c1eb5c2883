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

#ifndef EPICORPUS_ANALYTICS_FREQUENCY_H_
#define EPICORPUS_ANALYTICS_FREQUENCY_H_

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "epicorpus/corpus/model.h"

namespace epicorpus {

struct TermCount {
  std::string term;
  std::size_t count = 0;

  bool operator==(const TermCount &) const = default;
};

// Lowercased tokens tagged `pos` whose very next token is one of `targets`
// (lowercase), counted and sorted by count descending, then term.
std::vector<TermCount> PatternCounts(const std::vector<AnnotatedDocument> &docs,
                                     Pos pos, const std::set<std::string> &targets,
                                     unsigned jobs = 1);

struct MentionRatio {
  std::size_t count_a = 0;
  std::size_t count_b = 0;
  std::optional<double> ratio;  // count_a / count_b; empty when count_b is 0
};

// Occurrences of lowercased tokens in each set.
MentionRatio CountMentionRatio(const std::vector<AnnotatedDocument> &docs,
                               const std::set<std::string> &set_a,
                               const std::set<std::string> &set_b,
                               unsigned jobs = 1);

}  // namespace epicorpus

#endif  // EPICORPUS_ANALYTICS_FREQUENCY_H_
