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

#ifndef EPICORPUS_NER_LEXICON_H_
#define EPICORPUS_NER_LEXICON_H_

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "epicorpus/corpus/model.h"

namespace epicorpus {

struct LexiconEntry {
  std::string canonical;
  EntityType type = EntityType::kPlagueOntologyTerm;

  bool operator==(const LexiconEntry &) const = default;
};

// Term lexicon plus a table of OCR variants. Keys are match keys: the
// lowercased token sequence of a form joined by single spaces, so
// "M. Haffkine" and "m.  haffkine" share the key "m. haffkine".
//
// File format (UTF-8, tab-separated, "#" comments):
//   match_form <TAB> canonical <TAB> entity_type    an entry
//   variant <TAB> canonical                         an OCR variant
// A variant's canonical must name an entry, by canonical or match form,
// in any of the loaded files.
class EntityLexicon {
 public:
  // Bundled lexicon of persons, places, features, plague terms and groups.
  static const EntityLexicon &Default();

  // Parses and merges several sources, each given as (name, content).
  static EntityLexicon Parse(
      const std::vector<std::pair<std::string, std::string>> &sources);
  static EntityLexicon Load(const std::vector<std::filesystem::path> &paths);

  // Adds an entry. Throws a conflict error when the match key is already
  // present with another type.
  void AddEntry(std::string_view match_form, std::string canonical,
                EntityType type);
  // Throws a missing-reference error when `canonical` names no entry.
  void AddVariant(std::string_view variant, std::string_view canonical);

  const LexiconEntry *FindEntry(std::string_view key) const;
  const LexiconEntry *FindVariant(std::string_view key) const;

  std::size_t size() const { return entries_.size(); }
  std::size_t variant_count() const { return variants_.size(); }
  std::size_t max_tokens() const { return max_tokens_; }
  bool empty() const { return entries_.empty(); }

  const std::map<std::string, LexiconEntry> &entries() const {
    return entries_;
  }

 private:
  std::map<std::string, LexiconEntry> entries_;
  std::map<std::string, LexiconEntry> variants_;
  std::map<std::string, std::string> canonical_keys_;  // canonical -> key
  std::size_t max_tokens_ = 0;
};

// Match key for a surface form, as described above.
std::string LexiconKey(std::string_view form);

// Singular candidates for a plural word: bubo <- buboes, city <- cities,
// bacillus <- bacilli, rat <- rats. The word itself is not included.
std::vector<std::string> SingularForms(std::string_view lower_word);

// Longest match, left to right, case-insensitive, non-overlapping. The
// last token of a candidate may also match through SingularForms. A
// variant hit keeps the text as surface and sets corrected to the
// canonical form.
std::vector<EntityAnnotation> MatchLexiconEntities(
    std::string_view text, const std::vector<Token> &tokens,
    const EntityLexicon &lexicon);

}  // namespace epicorpus

#endif  // EPICORPUS_NER_LEXICON_H_
