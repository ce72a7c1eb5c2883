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

#ifndef EPICORPUS_NER_MENTION_H_
#define EPICORPUS_NER_MENTION_H_

#include <optional>
#include <string_view>
#include <vector>

#include "epicorpus/corpus/model.h"

namespace epicorpus {

// Helpers shared by the rule grammars. Token ranges are [begin, end).

struct NumberMatch {
  double value = 0;
  std::size_t end = 0;   // one past the last token consumed
  bool article = false;  // "a" / "an" read as one
};

// Reads a number starting at token `i`: digits ("48", "3.5", "12,000"),
// spelled-out numbers up to one hundred ("six", "twenty-one",
// "twenty one", "a hundred"), and, when `allow_article` is set, "a"/"an".
std::optional<NumberMatch> ParseNumberAt(const std::vector<Token> &tokens,
                                         std::size_t i, bool allow_article);

// Value of a single spelled-out number word or hyphenated compound
// ("ten", "forty-eight"), or nullopt.
std::optional<int> SpelledNumberValue(std::string_view lower);

// Entity covering tokens [begin, end) with its surface read from `text`.
EntityAnnotation MakeMention(std::string_view text,
                             const std::vector<Token> &tokens,
                             std::size_t begin, std::size_t end,
                             EntityType type);

// True when the token's lowercase form equals `word`.
inline bool TokenIs(const std::vector<Token> &tokens, std::size_t i,
                    std::string_view word) {
  return i < tokens.size() && tokens[i].lower == word;
}

}  // namespace epicorpus

#endif  // EPICORPUS_NER_MENTION_H_
