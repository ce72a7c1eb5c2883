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

#include "epicorpus/common/offset_map.h"

#include <algorithm>

#include "epicorpus/common/error.h"

namespace epicorpus {

OffsetMap OffsetMap::Identity(std::size_t size) {
  Builder builder;
  builder.Copy(size);
  return std::move(builder).Finish();
}

std::size_t OffsetMap::Map(std::size_t old_offset) const {
  if (old_offset >= forward_.size()) {
    throw Error(ErrorKind::kOutOfBounds,
                "offset " + std::to_string(old_offset) + " beyond mapped text");
  }
  return forward_[old_offset];
}

bool OffsetMap::IsCopied(std::size_t old_offset) const {
  return old_offset < copied_.size() && copied_[old_offset];
}

OffsetMap OffsetMap::Then(const OffsetMap &next) const {
  OffsetMap composed;
  composed.forward_.resize(forward_.size());
  composed.copied_.resize(copied_.size());
  for (std::size_t i = 0; i < forward_.size(); ++i) {
    composed.forward_[i] = next.Map(forward_[i]);
  }
  for (std::size_t i = 0; i < copied_.size(); ++i) {
    composed.copied_[i] = copied_[i] && next.IsCopied(forward_[i]);
  }
  return composed;
}

void OffsetMap::Builder::Copy(std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    forward_.push_back(new_pos_++);
    copied_.push_back(true);
  }
}

void OffsetMap::Builder::Replace(std::size_t old_n, std::size_t new_n) {
  for (std::size_t i = 0; i < old_n; ++i) {
    forward_.push_back(new_pos_ + std::min(i, new_n));
    copied_.push_back(false);
  }
  new_pos_ += new_n;
}

OffsetMap OffsetMap::Builder::Finish() && {
  OffsetMap map;
  map.forward_ = std::move(forward_);
  map.forward_.push_back(new_pos_);
  map.copied_ = std::move(copied_);
  return map;
}

}  // namespace epicorpus
