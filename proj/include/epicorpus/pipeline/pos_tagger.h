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

#ifndef EPICORPUS_PIPELINE_POS_TAGGER_H_
#define EPICORPUS_PIPELINE_POS_TAGGER_H_

#include <filesystem>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "epicorpus/corpus/model.h"

namespace epicorpus {

struct SuffixRule {
  std::string suffix;
  Pos pos = Pos::kNoun;
  // Rule fires only after a token with this tag.
  std::optional<Pos> previous;
};

// Word lists and suffix rules for the coarse tagger. The on-disk form is a
// directory of one-word-per-line files (pronouns.txt, function_words.txt,
// adjectives.txt, verbs.txt, nouns.txt, adverbs.txt) plus suffixes.txt with
// lines "suffix TAG [PREVIOUS_TAG]".
struct PosLexicon {
  std::unordered_set<std::string> pronouns;
  std::unordered_set<std::string> function_words;
  std::unordered_set<std::string> adjectives;
  std::unordered_set<std::string> verbs;
  std::unordered_set<std::string> nouns;
  std::unordered_set<std::string> adverbs;
  std::vector<SuffixRule> suffix_rules;

  static const PosLexicon &Default();
  static PosLexicon LoadDirectory(const std::filesystem::path &dir);
};

std::vector<SuffixRule> ParseSuffixRules(std::string_view content,
                                         const std::string &source);

// Deterministic lexicon-then-suffix tagging; see pos_tagger.cc for the
// precedence order.
void TagPosCoarse(std::vector<Token> &tokens,
                  const PosLexicon &lexicon = PosLexicon::Default());

}  // namespace epicorpus

#endif  // EPICORPUS_PIPELINE_POS_TAGGER_H_
