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

#ifndef EPICORPUS_COMMON_OFFSET_MAP_H_
#define EPICORPUS_COMMON_OFFSET_MAP_H_

#include <cstddef>
#include <vector>

namespace epicorpus {

// Total, monotone (non-decreasing) map from byte offsets of an old text to
// byte offsets of a rewritten text. Defined for every offset in
// [0, old_size]; Map(old_size) == new_size.
class OffsetMap {
 public:
  OffsetMap() : forward_{0} {}

  static OffsetMap Identity(std::size_t size);

  std::size_t Map(std::size_t old_offset) const;

  std::size_t old_size() const { return forward_.size() - 1; }
  std::size_t new_size() const { return forward_.back(); }

  // True when the old byte at `old_offset` was copied verbatim.
  bool IsCopied(std::size_t old_offset) const;

  // this followed by `next`.
  OffsetMap Then(const OffsetMap &next) const;

  bool operator==(const OffsetMap &other) const = default;

  class Builder {
   public:
    // `n` bytes copied unchanged.
    void Copy(std::size_t n);
    // `old_n` bytes replaced by `new_n` bytes. Old offsets inside the
    // replaced region map into the replacement, clamped to its end.
    void Replace(std::size_t old_n, std::size_t new_n);
    OffsetMap Finish() &&;

   private:
    std::vector<std::size_t> forward_;
    std::vector<bool> copied_;
    std::size_t new_pos_ = 0;
  };

 private:
  std::vector<std::size_t> forward_;
  std::vector<bool> copied_;
};

}  // namespace epicorpus

#endif  // EPICORPUS_COMMON_OFFSET_MAP_H_
