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

#include "epicorpus/annotation/alignment.h"

#include "epicorpus/common/error.h"
#include "epicorpus/common/text_util.h"
#include "epicorpus/pipeline/tokenizer.h"

namespace epicorpus {

namespace {

// Adjacent tokens glued together may form one box word.
constexpr std::size_t kMaxTokensPerBox = 4;

}  // namespace

std::string AlignmentKey(std::string_view word) {
  std::string key;
  for (char c : word) {
    if (IsWordByte(c)) key += IsAsciiAlpha(c) ? static_cast<char>(c | 0x20) : c;
  }
  return key.empty() ? ToLower(word) : key;
}

std::vector<PageWordBox> AlignTextToAlto(std::string_view text,
                                         std::vector<PageWordBox> boxes,
                                         const AlignmentOptions &options) {
  std::vector<Token> tokens = Tokenize(text);
  std::vector<std::string> keys;
  keys.reserve(tokens.size());
  for (const Token &t : tokens) keys.push_back(AlignmentKey(t.surface));

  std::size_t cursor = 0;
  std::size_t unaligned = 0;
  for (PageWordBox &box : boxes) {
    box.char_span.reset();
    std::string want = AlignmentKey(box.text);
    bool word_box = want != ToLower(box.text) ||
                    (!want.empty() && IsWordByte(want[0]));
    std::size_t skipped = 0;
    for (std::size_t j = cursor; j < tokens.size() && !box.char_span; ++j) {
      bool punct = IsPunctuationToken(tokens[j]);
      if (punct && word_box) continue;  // free to pass over
      std::string have;
      for (std::size_t m = 0; m < kMaxTokensPerBox && j + m < tokens.size();
           ++m) {
        if (m > 0 && tokens[j + m].span.start != tokens[j + m - 1].span.end) {
          break;
        }
        // Trailing punctuation contributes nothing to a word key.
        if (m > 0 && word_box && IsPunctuationToken(tokens[j + m])) continue;
        have += keys[j + m];
        if (have == want) {
          box.char_span = Span{tokens[j].span.start, tokens[j + m].span.end};
          cursor = j + m + 1;
          break;
        }
        if (have.size() >= want.size()) break;
      }
      if (!box.char_span && ++skipped > options.max_skip) break;
    }
    if (!box.char_span) ++unaligned;
  }
  if (!boxes.empty() &&
      static_cast<double>(unaligned) >
          options.max_unaligned_fraction * static_cast<double>(boxes.size())) {
    throw Error(ErrorKind::kAlignment,
                std::to_string(unaligned) + " of " +
                    std::to_string(boxes.size()) +
                    " word boxes could not be aligned to the text");
  }
  return boxes;
}

}  // namespace epicorpus
