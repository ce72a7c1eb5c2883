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

#ifndef EPICORPUS_PIPELINE_HYPHENATION_H_
#define EPICORPUS_PIPELINE_HYPHENATION_H_

#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "epicorpus/common/offset_map.h"

namespace epicorpus {

// Case-insensitive word set.
class Vocabulary {
 public:
  Vocabulary() = default;
  explicit Vocabulary(const std::vector<std::string> &words);

  // The bundled public-domain headword list (data/dictionary.txt).
  static const Vocabulary &Default();
  static Vocabulary Load(const std::string &path);

  void Add(std::string_view word);
  bool Contains(std::string_view word) const;
  // Contains(word), or the word with a regular inflection removed
  // ("epidemics", "spreading", "carried") is present. Lets an uninflected
  // headword list act as a dictionary of running-text forms.
  bool ContainsWordForm(std::string_view word) const;
  std::size_t size() const { return words_.size(); }

 private:
  std::unordered_set<std::string> words_;
};

struct HyphenationRepair {
  std::string text;
  OffsetMap map;  // raw offsets -> repaired offsets
};

// Repairs words broken across lines by end-of-line hyphenation. For every
// "left-<newline>right" (spaces around the line break allowed):
//   * joined "leftright" in vocabulary      -> "leftright"
//   * else "left-right" in vocabulary       -> "left-right"
//   * otherwise                              -> unchanged
HyphenationRepair RepairHyphenation(std::string_view raw,
                                    const Vocabulary &vocabulary);

}  // namespace epicorpus

#endif  // EPICORPUS_PIPELINE_HYPHENATION_H_
