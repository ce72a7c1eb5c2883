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

#include "epicorpus/pipeline/tokenizer.h"

#include <algorithm>

#include "epicorpus/common/resources.h"
#include "epicorpus/common/text_util.h"

namespace epicorpus {

namespace {

char32_t CodePointAt(std::string_view text, std::size_t pos) {
  std::size_t len = CharLengthAt(text, pos);
  std::u32string decoded = DecodeUtf8(text.substr(pos, len));
  return decoded.empty() ? 0xFFFD : decoded[0];
}

bool IsNonAsciiWordCodePoint(char32_t cp) {
  if (cp >= 0x00A0 && cp <= 0x00BF) return false;  // Latin-1 punctuation
  if (cp == 0x00D7 || cp == 0x00F7) return false;  // multiplication, division
  if (cp >= 0x2000 && cp <= 0x206F) return false;  // general punctuation
  if (cp >= 0x2190 && cp <= 0x2BFF) return false;  // arrows, symbols
  if (cp >= 0x3000 && cp <= 0x303F) return false;  // CJK punctuation
  if (cp == 0xFFFD) return false;
  return cp >= 0x80;
}

bool IsDigitAt(std::string_view text, std::size_t pos) {
  return pos < text.size() && IsAsciiDigit(text[pos]);
}

bool IsAlphaAt(std::string_view text, std::size_t pos) {
  return pos < text.size() && IsWordCharAt(text, pos) &&
         !IsAsciiDigit(text[pos]);
}

// Exactly three digits at `pos` not followed by another digit.
bool IsThousandsGroup(std::string_view text, std::size_t pos) {
  return IsDigitAt(text, pos) && IsDigitAt(text, pos + 1) &&
         IsDigitAt(text, pos + 2) && !IsDigitAt(text, pos + 3);
}

std::size_t ConsumeWord(std::string_view text, std::size_t pos) {
  std::size_t i = pos;
  while (i < text.size()) {
    if (IsWordCharAt(text, i)) {
      i += CharLengthAt(text, i);
      continue;
    }
    const char c = text[i];
    const bool prev_digit = i > pos && IsAsciiDigit(text[i - 1]);
    if (c == '-' && i + 1 < text.size() && IsWordCharAt(text, i + 1)) {
      i += 1;
      continue;
    }
    if (c == '\'' && i > pos && IsAlphaAt(text, i + 1) && !prev_digit) {
      i += 1;
      continue;
    }
    if ((c == '.' || c == ':') && prev_digit && IsDigitAt(text, i + 1)) {
      i += 1;
      continue;
    }
    if (c == ',' && prev_digit && IsThousandsGroup(text, i + 1)) {
      i += 1;
      continue;
    }
    break;
  }
  return i;
}

}  // namespace

std::size_t CharLengthAt(std::string_view text, std::size_t pos) {
  auto b = static_cast<unsigned char>(text[pos]);
  std::size_t len = 1;
  if ((b & 0xE0) == 0xC0) {
    len = 2;
  } else if ((b & 0xF0) == 0xE0) {
    len = 3;
  } else if ((b & 0xF8) == 0xF0) {
    len = 4;
  }
  return std::min(len, text.size() - pos);
}

bool IsWordCharAt(std::string_view text, std::size_t pos) {
  const char c = text[pos];
  if (IsAsciiAlpha(c) || IsAsciiDigit(c)) return true;
  if (static_cast<unsigned char>(c) < 0x80) return false;
  return IsNonAsciiWordCodePoint(CodePointAt(text, pos));
}

const Abbreviations &Abbreviations::Default() {
  static const Abbreviations *abbreviations = new Abbreviations(
      ParseWordList(EmbeddedResource("lexicons/abbreviations.txt")));
  return *abbreviations;
}

Abbreviations Abbreviations::Load(const std::string &path) {
  return Abbreviations(LoadWordList(path));
}

Abbreviations::Abbreviations(std::vector<std::string> entries)
    : entries_(std::move(entries)) {
  std::stable_sort(entries_.begin(), entries_.end(),
                   [](const std::string &a, const std::string &b) {
                     return a.size() > b.size();
                   });
  for (const std::string &entry : entries_) lowered_.push_back(ToLower(entry));
}

std::size_t Abbreviations::MatchAt(std::string_view text,
                                   std::size_t pos) const {
  if (pos > 0 && IsWordCharAt(text, Utf8Floor(text, pos - 1))) return 0;
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    const std::string &entry = entries_[k];
    if (pos + entry.size() > text.size()) continue;
    std::string_view candidate = text.substr(pos, entry.size());
    // Capitalised entries ("Dr.", "No.") are case-sensitive; lowercase ones
    // ("a.m.") also match their upper-case spelling.
    if (IsAsciiAlpha(entry[0]) && entry[0] >= 'A' && entry[0] <= 'Z') {
      if (candidate != entry) continue;
    } else if (ToLower(candidate) != lowered_[k]) {
      continue;
    }
    std::size_t end = pos + entry.size();
    if (end < text.size() && IsWordCharAt(text, end)) continue;
    return entry.size();
  }
  return 0;
}

bool Abbreviations::Contains(std::string_view token) const {
  const std::string lower = ToLower(token);
  return std::find(lowered_.begin(), lowered_.end(), lower) != lowered_.end();
}

std::vector<Token> Tokenize(std::string_view text,
                            const Abbreviations &abbreviations) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    if (IsSpace(text[i])) {
      ++i;
      continue;
    }
    std::size_t end = i + abbreviations.MatchAt(text, i);
    if (end == i) {
      end = IsWordCharAt(text, i) ? ConsumeWord(text, i)
                                  : i + CharLengthAt(text, i);
    }
    Token token;
    token.span = Span{i, end};
    token.surface = std::string(text.substr(i, end - i));
    token.lower = ToLower(token.surface);
    tokens.push_back(std::move(token));
    i = end;
  }
  return tokens;
}

bool IsPunctuationToken(const Token &token) {
  for (std::size_t i = 0; i < token.surface.size();
       i += CharLengthAt(token.surface, i)) {
    if (IsWordCharAt(token.surface, i)) return false;
  }
  return true;
}

}  // namespace epicorpus
