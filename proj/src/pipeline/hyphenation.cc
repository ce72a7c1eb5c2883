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

#include "epicorpus/pipeline/hyphenation.h"

#include "epicorpus/common/resources.h"
#include "epicorpus/common/text_util.h"

namespace epicorpus {

Vocabulary::Vocabulary(const std::vector<std::string> &words) {
  for (const std::string &word : words) Add(word);
}

Vocabulary Vocabulary::Load(const std::string &path) {
  return Vocabulary(LoadWordList(path));
}

void Vocabulary::Add(std::string_view word) { words_.insert(ToLower(word)); }

bool Vocabulary::Contains(std::string_view word) const {
  return words_.count(ToLower(word)) > 0;
}

const Vocabulary &Vocabulary::Default() {
  static const Vocabulary *vocabulary = new Vocabulary(
      ParseWordList(EmbeddedResource("dictionary.txt")));
  return *vocabulary;
}

bool Vocabulary::ContainsWordForm(std::string_view word) const {
  std::string w = ToLower(word);
  if (words_.count(w)) return true;
  auto has = [&](std::size_t cut, std::string_view add = {}) {
    if (w.size() <= cut + 1) return false;
    return words_.count(w.substr(0, w.size() - cut) + std::string(add)) > 0;
  };
  // Undoubles "stopped" -> "stop".
  auto undoubled = [&](std::size_t cut) {
    std::size_t n = w.size() - cut;
    return n >= 3 && w[n - 1] == w[n - 2] && has(cut + 1);
  };
  if (EndsWith(w, "ies") && has(3, "y")) return true;
  if (EndsWith(w, "es") && has(2)) return true;
  if (EndsWith(w, "s") && !EndsWith(w, "ss") && has(1)) return true;
  if (EndsWith(w, "ied") && has(3, "y")) return true;
  if (EndsWith(w, "ed") && (has(2) || has(1) || undoubled(2))) return true;
  if (EndsWith(w, "ing") && (has(3) || has(3, "e") || undoubled(3))) {
    return true;
  }
  return false;
}

HyphenationRepair RepairHyphenation(std::string_view raw,
                                    const Vocabulary &vocabulary) {
  std::string out;
  out.reserve(raw.size());
  OffsetMap::Builder map;

  std::size_t copied_to = 0;  // raw[0, copied_to) already emitted
  std::size_t i = 0;
  while (i < raw.size()) {
    if (raw[i] != '-' || i == 0 || !IsWordByte(raw[i - 1])) {
      ++i;
      continue;
    }
    // Left fragment: the word run ending at the hyphen.
    std::size_t left_begin = i;
    while (left_begin > copied_to && IsWordByte(raw[left_begin - 1])) {
      --left_begin;
    }
    // Line break, optionally surrounded by horizontal whitespace.
    std::size_t j = i + 1;
    while (j < raw.size() && (raw[j] == ' ' || raw[j] == '\t')) ++j;
    bool newline = false;
    if (j < raw.size() && raw[j] == '\r') ++j;
    if (j < raw.size() && raw[j] == '\n') {
      newline = true;
      ++j;
    }
    if (!newline) {
      ++i;
      continue;
    }
    while (j < raw.size() && (raw[j] == ' ' || raw[j] == '\t')) ++j;
    std::size_t right_begin = j;
    std::size_t right_end = j;
    while (right_end < raw.size() && IsWordByte(raw[right_end])) ++right_end;
    if (right_end == right_begin) {
      i = j;
      continue;
    }

    std::string_view left = raw.substr(left_begin, i - left_begin);
    std::string_view right = raw.substr(right_begin, right_end - right_begin);
    std::string joined = std::string(left) + std::string(right);
    std::string hyphenated = std::string(left) + "-" + std::string(right);

    std::size_t break_len = right_begin - (i + 1);
    if (vocabulary.ContainsWordForm(joined)) {
      // Copy through the left fragment, drop "-<break>".
      out.append(raw.substr(copied_to, i - copied_to));
      map.Copy(i - copied_to);
      map.Replace(1 + break_len, 0);
      copied_to = right_begin;
    } else if (vocabulary.Contains(hyphenated)) {
      // Keep the hyphen, drop the break.
      out.append(raw.substr(copied_to, i + 1 - copied_to));
      map.Copy(i + 1 - copied_to);
      map.Replace(break_len, 0);
      copied_to = right_begin;
    }
    i = right_end;
  }
  out.append(raw.substr(copied_to));
  map.Copy(raw.size() - copied_to);
  return HyphenationRepair{std::move(out), std::move(map).Finish()};
}

}  // namespace epicorpus
