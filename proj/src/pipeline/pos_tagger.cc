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

#include "epicorpus/pipeline/pos_tagger.h"

#include <sstream>

#include "epicorpus/common/error.h"
#include "epicorpus/common/resources.h"
#include "epicorpus/common/text_util.h"
#include "epicorpus/pipeline/tokenizer.h"

namespace epicorpus {

namespace {

// Suffix rules need a stem of at least this many bytes ("fly" is not ADV).
constexpr std::size_t kMinStem = 2;

std::unordered_set<std::string> ToSet(std::string_view content) {
  std::unordered_set<std::string> set;
  for (const std::string &word : ParseWordList(content)) {
    set.insert(ToLower(word));
  }
  return set;
}

bool IsNumeric(const Token &token) {
  return !token.surface.empty() && IsAsciiDigit(token.surface[0]);
}

bool HasLetter(std::string_view s) {
  for (char c : s) {
    if (IsAsciiAlpha(c) || static_cast<unsigned char>(c) >= 0x80) return true;
  }
  return false;
}

Pos TagOne(const Token &token, std::optional<Pos> previous,
           const PosLexicon &lexicon) {
  if (IsPunctuationToken(token)) return Pos::kPunct;
  if (IsNumeric(token)) return Pos::kNum;
  const std::string &w = token.lower;

  // Closed classes.
  if (lexicon.pronouns.count(w)) return Pos::kPron;
  if (lexicon.function_words.count(w)) return Pos::kFunc;

  // Open-class seed lexicons.
  if (lexicon.adjectives.count(w)) return Pos::kAdj;
  if (lexicon.verbs.count(w)) return Pos::kVerb;
  if (lexicon.nouns.count(w)) return Pos::kNoun;
  if (lexicon.adverbs.count(w)) return Pos::kAdv;

  for (const SuffixRule &rule : lexicon.suffix_rules) {
    if (w.size() < rule.suffix.size() + kMinStem) continue;
    if (!EndsWith(w, rule.suffix)) continue;
    if (rule.previous && previous != rule.previous) continue;
    return rule.pos;
  }

  if (HasLetter(w)) return Pos::kNoun;
  return Pos::kOther;
}

}  // namespace

std::vector<SuffixRule> ParseSuffixRules(std::string_view content,
                                         const std::string &source) {
  std::vector<SuffixRule> rules;
  std::size_t line_no = 0;
  for (const std::string &raw_line : Split(content, '\n')) {
    ++line_no;
    std::string_view line = raw_line;
    if (std::size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = Trim(line);
    if (line.empty()) continue;
    std::istringstream fields{std::string(line)};
    std::string suffix, tag, previous;
    fields >> suffix >> tag >> previous;
    SuffixRule rule;
    rule.suffix = ToLower(suffix);
    auto pos = ParsePos(tag);
    if (!pos) throw ParseError(source, line_no, "unknown tag '" + tag + "'");
    rule.pos = *pos;
    if (!previous.empty()) {
      rule.previous = ParsePos(previous);
      if (!rule.previous) {
        throw ParseError(source, line_no, "unknown tag '" + previous + "'");
      }
    }
    rules.push_back(std::move(rule));
  }
  return rules;
}

const PosLexicon &PosLexicon::Default() {
  static const PosLexicon *lexicon = [] {
    auto *lex = new PosLexicon;
    lex->pronouns = ToSet(EmbeddedResource("lexicons/pronouns.txt"));
    lex->function_words = ToSet(EmbeddedResource("lexicons/function_words.txt"));
    lex->adjectives = ToSet(EmbeddedResource("lexicons/adjectives.txt"));
    lex->verbs = ToSet(EmbeddedResource("lexicons/verbs.txt"));
    lex->nouns = ToSet(EmbeddedResource("lexicons/nouns.txt"));
    lex->adverbs = ToSet(EmbeddedResource("lexicons/adverbs.txt"));
    lex->suffix_rules = ParseSuffixRules(
        EmbeddedResource("lexicons/suffixes.txt"), "lexicons/suffixes.txt");
    return lex;
  }();
  return *lexicon;
}

PosLexicon PosLexicon::LoadDirectory(const std::filesystem::path &dir) {
  PosLexicon lex;
  lex.pronouns = ToSet(ReadFile(dir / "pronouns.txt"));
  lex.function_words = ToSet(ReadFile(dir / "function_words.txt"));
  lex.adjectives = ToSet(ReadFile(dir / "adjectives.txt"));
  lex.verbs = ToSet(ReadFile(dir / "verbs.txt"));
  lex.nouns = ToSet(ReadFile(dir / "nouns.txt"));
  lex.adverbs = ToSet(ReadFile(dir / "adverbs.txt"));
  const auto suffix_path = dir / "suffixes.txt";
  lex.suffix_rules = ParseSuffixRules(ReadFile(suffix_path), suffix_path.string());
  return lex;
}

// Precedence: punctuation, numerals, closed classes (PRON, FUNC), open-class
// seed lexicons (ADJ, VERB, NOUN, ADV), suffix rules in file order, then
// NOUN for anything alphabetic.
void TagPosCoarse(std::vector<Token> &tokens, const PosLexicon &lexicon) {
  std::optional<Pos> previous;
  for (Token &token : tokens) {
    token.pos = TagOne(token, previous, lexicon);
    previous = token.pos;
  }
}

}  // namespace epicorpus
