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

#include "epicorpus/pipeline/sentences.h"

#include <string_view>

namespace epicorpus {

namespace {

constexpr std::size_t kShortParenthetical = 5;

bool IsTerminator(std::string_view s) { return s == "." || s == "!" || s == "?"; }

bool IsCloser(std::string_view s) {
  return s == "\"" || s == "'" || s == ")" || s == "]" ||
         s == "\xE2\x80\x9D" /* ” */ || s == "\xE2\x80\x99" /* ’ */;
}

}  // namespace

std::vector<Sentence> SplitSentences(const std::vector<Token> &tokens) {
  const std::size_t n = tokens.size();

  // Tokens strictly inside a short parenthetical cannot end a sentence.
  std::vector<bool> protect(n, false);
  std::vector<std::size_t> open;
  for (std::size_t i = 0; i < n; ++i) {
    if (tokens[i].surface == "(") {
      open.push_back(i);
    } else if (tokens[i].surface == ")" && !open.empty()) {
      std::size_t start = open.back();
      open.pop_back();
      if (i - start - 1 < kShortParenthetical) {
        for (std::size_t k = start + 1; k < i; ++k) protect[k] = true;
      }
    }
  }

  std::vector<Sentence> sentences;
  std::size_t begin = 0;
  std::size_t i = 0;
  auto close = [&](std::size_t end) {
    Sentence sentence;
    sentence.token_begin = begin;
    sentence.token_end = end;
    sentence.span = Span{tokens[begin].span.start, tokens[end - 1].span.end};
    sentences.push_back(sentence);
    begin = end;
  };
  while (i < n) {
    if (IsTerminator(tokens[i].surface) && !protect[i]) {
      std::size_t end = i + 1;
      // Trailing terminators and closers attached without whitespace.
      while (end < n && tokens[end].span.start == tokens[end - 1].span.end &&
             (IsTerminator(tokens[end].surface) ||
              IsCloser(tokens[end].surface))) {
        ++end;
      }
      close(end);
      i = end;
      continue;
    }
    ++i;
  }
  if (begin < n) close(n);
  return sentences;
}

}  // namespace epicorpus
