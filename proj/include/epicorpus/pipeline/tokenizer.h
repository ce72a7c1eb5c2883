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

#ifndef EPICORPUS_PIPELINE_TOKENIZER_H_
#define EPICORPUS_PIPELINE_TOKENIZER_H_

#include <string>
#include <string_view>
#include <vector>

#include "epicorpus/corpus/model.h"

namespace epicorpus {

// Abbreviations that keep their trailing period ("Dr.", "a.m."). Matched
// case-insensitively, longest first, on word boundaries.
class Abbreviations {
 public:
  // Titles and time abbreviations.
  static const Abbreviations &Default();
  static Abbreviations Load(const std::string &path);

  explicit Abbreviations(std::vector<std::string> entries);

  // Length of the longest abbreviation starting at `pos`, or 0.
  std::size_t MatchAt(std::string_view text, std::size_t pos) const;
  bool Contains(std::string_view token) const;

  const std::vector<std::string> &entries() const { return entries_; }

 private:
  std::vector<std::string> entries_;  // longest first
  std::vector<std::string> lowered_;
};

// UTF-8 aware word-character test: ASCII letters and digits plus non-ASCII
// letters. General punctuation (curly quotes, dashes) is not a word char.
bool IsWordCharAt(std::string_view text, std::size_t pos);
// Byte length of the UTF-8 sequence starting at `pos` (at least 1).
std::size_t CharLengthAt(std::string_view text, std::size_t pos);

// Splits text into tokens. Every non-whitespace byte lands in exactly one
// token. Punctuation is split from words except inside abbreviations,
// decimal numbers, clock times ("4:30") and intra-word hyphens.
std::vector<Token> Tokenize(std::string_view text,
                            const Abbreviations &abbreviations =
                                Abbreviations::Default());

// True when the token has no letter or digit.
bool IsPunctuationToken(const Token &token);

}  // namespace epicorpus

#endif  // EPICORPUS_PIPELINE_TOKENIZER_H_
