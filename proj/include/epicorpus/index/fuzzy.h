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

#ifndef EPICORPUS_INDEX_FUZZY_H_
#define EPICORPUS_INDEX_FUZZY_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace epicorpus {

// Code-point trie over a vocabulary, searched with one Levenshtein DP row
// per trie edge so whole subtrees are pruned once every cell of the row
// exceeds the edit budget.
class FuzzyTrie {
 public:
  FuzzyTrie() { nodes_.emplace_back(); }
  explicit FuzzyTrie(const std::vector<std::string> &vocabulary);

  void Insert(std::string_view term);
  std::size_t size() const { return terms_.size(); }

  // Vocabulary terms within `max_edits` unit-cost insertions, deletions
  // and substitutions of `term`, sorted.
  std::vector<std::string> Expand(std::string_view term, int max_edits) const;

 private:
  struct Node {
    std::vector<std::pair<char32_t, std::uint32_t>> children;  // sorted
    std::int64_t term = -1;                                     // into terms_
  };

  void Walk(std::uint32_t node, const std::u32string &target,
            const std::vector<int> &row, int max_edits,
            std::vector<std::string> &out) const;

  std::vector<Node> nodes_;
  std::vector<std::string> terms_;
};

// One-shot form over an arbitrary vocabulary.
std::vector<std::string> FuzzyExpand(std::string_view term, int max_edits,
                                     const std::vector<std::string> &vocabulary);

}  // namespace epicorpus

#endif  // EPICORPUS_INDEX_FUZZY_H_
