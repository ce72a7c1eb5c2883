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

#include "epicorpus/index/fuzzy.h"

#include <algorithm>

#include "epicorpus/common/error.h"
#include "epicorpus/common/text_util.h"

namespace epicorpus {

FuzzyTrie::FuzzyTrie(const std::vector<std::string> &vocabulary) : FuzzyTrie() {
  for (const std::string &term : vocabulary) Insert(term);
}

void FuzzyTrie::Insert(std::string_view term) {
  std::uint32_t node = 0;
  for (char32_t c : DecodeUtf8(term)) {
    auto &kids = nodes_[node].children;
    auto it = std::lower_bound(
        kids.begin(), kids.end(), c,
        [](const auto &edge, char32_t key) { return edge.first < key; });
    if (it != kids.end() && it->first == c) {
      node = it->second;
      continue;
    }
    auto next = static_cast<std::uint32_t>(nodes_.size());
    kids.insert(it, {c, next});
    nodes_.emplace_back();  // invalidates `kids`
    node = next;
  }
  if (nodes_[node].term < 0) {
    nodes_[node].term = static_cast<std::int64_t>(terms_.size());
    terms_.emplace_back(term);
  }
}

void FuzzyTrie::Walk(std::uint32_t node, const std::u32string &target,
                     const std::vector<int> &row, int max_edits,
                     std::vector<std::string> &out) const {
  const Node &n = nodes_[node];
  if (n.term >= 0 && row.back() <= max_edits) {
    out.push_back(terms_[static_cast<std::size_t>(n.term)]);
  }
  std::vector<int> next(row.size());
  for (const auto &[c, child] : n.children) {
    next[0] = row[0] + 1;
    int best = next[0];
    for (std::size_t j = 1; j < row.size(); ++j) {
      int substitute = row[j - 1] + (target[j - 1] == c ? 0 : 1);
      next[j] = std::min({next[j - 1] + 1, row[j] + 1, substitute});
      best = std::min(best, next[j]);
    }
    if (best <= max_edits) Walk(child, target, next, max_edits, out);
  }
}

std::vector<std::string> FuzzyTrie::Expand(std::string_view term,
                                           int max_edits) const {
  if (max_edits < 0) {
    throw Error(ErrorKind::kInvalidArgument, "negative edit distance");
  }
  std::u32string target = DecodeUtf8(term);
  std::vector<int> row(target.size() + 1);
  for (std::size_t j = 0; j < row.size(); ++j) row[j] = static_cast<int>(j);
  std::vector<std::string> out;
  Walk(0, target, row, max_edits, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> FuzzyExpand(std::string_view term, int max_edits,
                                     const std::vector<std::string> &vocabulary) {
  return FuzzyTrie(vocabulary).Expand(term, max_edits);
}

}  // namespace epicorpus
