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

#ifndef EPICORPUS_ANNOTATION_ALIGNMENT_H_
#define EPICORPUS_ANNOTATION_ALIGNMENT_H_

#include <string>
#include <string_view>
#include <vector>

#include "epicorpus/corpus/model.h"

namespace epicorpus {

struct AlignmentOptions {
  // Document words that may be passed over while looking for the next box.
  std::size_t max_skip = 2;
  // Above this share of unaligned boxes the inputs are taken to differ.
  double max_unaligned_fraction = 0.2;
};

// Comparison key for a box or token: lowercased, punctuation removed.
// Strings made only of punctuation keep their lowercased form.
std::string AlignmentKey(std::string_view word);

// Walks the boxes in order and assigns each the span of the next document
// token(s) with an equal key, passing over at most max_skip words. A box
// that finds no match keeps char_span empty and does not move the cursor,
// so a box is never attached to the wrong word. Several adjacent tokens
// may match one box ("o'clock", "1894."). Throws Error(kAlignment) when
// too many boxes stay unaligned.
std::vector<PageWordBox> AlignTextToAlto(std::string_view text,
                                         std::vector<PageWordBox> boxes,
                                         const AlignmentOptions &options = {});

}  // namespace epicorpus

#endif  // EPICORPUS_ANNOTATION_ALIGNMENT_H_
