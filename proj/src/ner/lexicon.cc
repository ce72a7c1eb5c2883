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

#include "epicorpus/ner/lexicon.h"

#include <algorithm>

#include "epicorpus/common/error.h"
#include "epicorpus/common/resources.h"
#include "epicorpus/common/text_util.h"
#include "epicorpus/ner/mention.h"
#include "epicorpus/pipeline/tokenizer.h"

namespace epicorpus {

namespace {

struct PendingVariant {
  std::string source;
  std::size_t line = 0;
  std::string variant;
  std::string canonical;
};

std::size_t KeyTokenCount(std::string_view key) {
  return static_cast<std::size_t>(std::count(key.begin(), key.end(), ' ')) + 1;
}

}  // namespace

std::string LexiconKey(std::string_view form) {
  std::string key;
  for (const Token &token : Tokenize(form)) {
    if (!key.empty()) key += ' ';
    key += token.lower;
  }
  return key;
}

std::vector<std::string> SingularForms(std::string_view w) {
  std::vector<std::string> out;
  auto add = [&](std::string s) {
    if (!s.empty() && std::find(out.begin(), out.end(), s) == out.end()) {
      out.push_back(std::move(s));
    }
  };
  std::string word(w);
  if (EndsWith(w, "ies") && w.size() > 3) {
    add(word.substr(0, w.size() - 3) + "y");
  }
  if (EndsWith(w, "es") && w.size() > 2) add(word.substr(0, w.size() - 2));
  if (EndsWith(w, "s") && !EndsWith(w, "ss") && w.size() > 1) {
    add(word.substr(0, w.size() - 1));
  }
  if (EndsWith(w, "i") && w.size() > 1) {
    add(word.substr(0, w.size() - 1) + "us");
  }
  return out;
}

void EntityLexicon::AddEntry(std::string_view match_form,
                             std::string canonical, EntityType type) {
  std::string key = LexiconKey(match_form);
  if (key.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "empty lexicon match form");
  }
  auto it = entries_.find(key);
  if (it != entries_.end()) {
    if (it->second.type != type) {
      throw Error(ErrorKind::kConflict,
                  "lexicon form '" + key + "' has conflicting types " +
                      std::string(EntityTypeName(it->second.type)) + " and " +
                      std::string(EntityTypeName(type)));
    }
    return;
  }
  canonical_keys_.emplace(LexiconKey(canonical), key);
  max_tokens_ = std::max(max_tokens_, KeyTokenCount(key));
  entries_.emplace(std::move(key), LexiconEntry{std::move(canonical), type});
}

void EntityLexicon::AddVariant(std::string_view variant,
                               std::string_view canonical) {
  std::string key = LexiconKey(variant);
  if (key.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "empty lexicon variant");
  }
  std::string target = LexiconKey(canonical);
  const LexiconEntry *entry = FindEntry(target);
  if (!entry) {
    auto it = canonical_keys_.find(target);
    if (it != canonical_keys_.end()) entry = FindEntry(it->second);
  }
  if (!entry) {
    throw Error(ErrorKind::kMissingReference,
                "variant '" + std::string(variant) +
                    "' refers to unknown canonical '" +
                    std::string(canonical) + "'");
  }
  auto existing = variants_.find(key);
  if (existing != variants_.end()) {
    if (!(existing->second == *entry)) {
      throw Error(ErrorKind::kConflict,
                  "variant '" + key + "' maps to both '" +
                      existing->second.canonical + "' and '" +
                      entry->canonical + "'");
    }
    return;
  }
  max_tokens_ = std::max(max_tokens_, KeyTokenCount(key));
  variants_.emplace(std::move(key), *entry);
}

const LexiconEntry *EntityLexicon::FindEntry(std::string_view key) const {
  auto it = entries_.find(std::string(key));
  return it == entries_.end() ? nullptr : &it->second;
}

const LexiconEntry *EntityLexicon::FindVariant(std::string_view key) const {
  auto it = variants_.find(std::string(key));
  return it == variants_.end() ? nullptr : &it->second;
}

EntityLexicon EntityLexicon::Parse(
    const std::vector<std::pair<std::string, std::string>> &sources) {
  EntityLexicon lexicon;
  std::vector<PendingVariant> variants;
  for (const auto &[source, content] : sources) {
    std::size_t line_no = 0;
    for (const std::string &raw : Split(content, '\n')) {
      ++line_no;
      std::string_view line = raw;
      if (EndsWith(line, "\r")) line.remove_suffix(1);
      if (Trim(line).empty() || Trim(line)[0] == '#') continue;
      std::vector<std::string> fields = Split(line, '\t');
      for (std::string &f : fields) f = std::string(Trim(f));
      if (fields.size() == 3) {
        auto type = ParseEntityType(fields[2]);
        if (!type) {
          throw ParseError(source, line_no,
                           "unknown entity type '" + fields[2] + "'");
        }
        if (fields[0].empty() || fields[1].empty()) {
          throw ParseError(source, line_no, "empty lexicon field");
        }
        try {
          lexicon.AddEntry(fields[0], fields[1], *type);
        } catch (const Error &e) {
          throw Error(e.kind(), source + ":" + std::to_string(line_no) +
                                    ": " + e.what());
        }
      } else if (fields.size() == 2) {
        if (fields[0].empty() || fields[1].empty()) {
          throw ParseError(source, line_no, "empty variant field");
        }
        variants.push_back({source, line_no, fields[0], fields[1]});
      } else {
        throw ParseError(source, line_no,
                         "expected 2 or 3 tab-separated fields, got " +
                             std::to_string(fields.size()));
      }
    }
  }
  // Variants may point at entries from later files.
  for (const PendingVariant &v : variants) {
    try {
      lexicon.AddVariant(v.variant, v.canonical);
    } catch (const Error &e) {
      throw Error(e.kind(),
                  v.source + ":" + std::to_string(v.line) + ": " + e.what());
    }
  }
  return lexicon;
}

EntityLexicon EntityLexicon::Load(
    const std::vector<std::filesystem::path> &paths) {
  std::vector<std::pair<std::string, std::string>> sources;
  for (const auto &path : paths) {
    sources.emplace_back(path.string(), ReadFile(path));
  }
  return Parse(sources);
}

const EntityLexicon &EntityLexicon::Default() {
  static const EntityLexicon *lexicon = new EntityLexicon(Parse(
      {{"lexicons/entities.tsv",
        std::string(EmbeddedResource("lexicons/entities.tsv"))}}));
  return *lexicon;
}

std::vector<EntityAnnotation> MatchLexiconEntities(
    std::string_view text, const std::vector<Token> &tokens,
    const EntityLexicon &lexicon) {
  std::vector<EntityAnnotation> out;
  if (lexicon.empty()) return out;
  std::size_t i = 0;
  while (i < tokens.size()) {
    bool matched = false;
    if (!IsPunctuationToken(tokens[i])) {
      std::size_t longest = std::min(lexicon.max_tokens(), tokens.size() - i);
      for (std::size_t n = longest; n >= 1 && !matched; --n) {
        std::string prefix;
        for (std::size_t k = i; k + 1 < i + n; ++k) {
          prefix += tokens[k].lower;
          prefix += ' ';
        }
        const std::string &last = tokens[i + n - 1].lower;
        std::vector<std::string> forms = {last};
        for (std::string &s : SingularForms(last)) forms.push_back(std::move(s));
        for (const std::string &form : forms) {
          std::string key = prefix + form;
          const LexiconEntry *entry = lexicon.FindEntry(key);
          bool variant = false;
          if (!entry && form == last) {
            entry = lexicon.FindVariant(key);
            variant = entry != nullptr;
          }
          if (!entry) continue;
          EntityAnnotation e = MakeMention(text, tokens, i, i + n, entry->type);
          if (variant && e.surface != entry->canonical) {
            e.corrected = entry->canonical;
          }
          out.push_back(std::move(e));
          i += n;
          matched = true;
          break;
        }
      }
    }
    if (!matched) ++i;
  }
  return out;
}

}  // namespace epicorpus
