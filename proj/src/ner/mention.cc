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

#include "epicorpus/ner/mention.h"

#include <array>
#include <charconv>
#include <string>

#include "epicorpus/common/text_util.h"

namespace epicorpus {

namespace {

constexpr std::array<std::string_view, 20> kUnits = {
    "zero",    "one",     "two",       "three",    "four",
    "five",    "six",     "seven",     "eight",    "nine",
    "ten",     "eleven",  "twelve",    "thirteen", "fourteen",
    "fifteen", "sixteen", "seventeen", "eighteen", "nineteen"};

constexpr std::array<std::string_view, 10> kTens = {
    "", "", "twenty", "thirty", "forty", "fifty", "sixty", "seventy",
    "eighty", "ninety"};

std::optional<int> UnitValue(std::string_view w) {
  for (std::size_t i = 1; i < kUnits.size(); ++i) {
    if (kUnits[i] == w) return static_cast<int>(i);
  }
  return std::nullopt;
}

std::optional<int> TensValue(std::string_view w) {
  for (std::size_t i = 2; i < kTens.size(); ++i) {
    if (kTens[i] == w) return static_cast<int>(i * 10);
  }
  return std::nullopt;
}

// "48", "3.5", "12,000".
std::optional<double> DigitValue(std::string_view s) {
  if (s.empty() || !IsAsciiDigit(s[0])) return std::nullopt;
  std::string plain;
  std::size_t group = 0;
  bool seen_comma = false, seen_dot = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (IsAsciiDigit(c)) {
      plain += c;
      ++group;
    } else if (c == ',' && !seen_dot) {
      if ((seen_comma && group != 3) || (!seen_comma && group > 3)) {
        return std::nullopt;
      }
      seen_comma = true;
      group = 0;
    } else if (c == '.' && !seen_dot && i + 1 < s.size()) {
      if (seen_comma && group != 3) return std::nullopt;
      seen_dot = true;
      plain += c;
      group = 0;
    } else {
      return std::nullopt;
    }
  }
  if (seen_comma && !seen_dot && group != 3) return std::nullopt;
  double value = 0;
  auto [ptr, ec] =
      std::from_chars(plain.data(), plain.data() + plain.size(), value);
  if (ec != std::errc() || ptr != plain.data() + plain.size()) {
    return std::nullopt;
  }
  return value;
}

}  // namespace

std::optional<int> SpelledNumberValue(std::string_view lower) {
  if (auto v = UnitValue(lower)) return v;
  if (auto v = TensValue(lower)) return v;
  if (lower == "hundred") return 100;
  std::size_t dash = lower.find('-');
  if (dash == std::string_view::npos) return std::nullopt;
  auto tens = TensValue(lower.substr(0, dash));
  auto unit = UnitValue(lower.substr(dash + 1));
  if (!tens || !unit || *unit > 9) return std::nullopt;
  return *tens + *unit;
}

std::optional<NumberMatch> ParseNumberAt(const std::vector<Token> &tokens,
                                         std::size_t i, bool allow_article) {
  if (i >= tokens.size()) return std::nullopt;
  const std::string &w = tokens[i].lower;
  if (auto v = DigitValue(w)) return NumberMatch{*v, i + 1, false};

  // "a hundred" / "one hundred".
  if ((w == "a" || w == "one") && TokenIs(tokens, i + 1, "hundred")) {
    return NumberMatch{100, i + 2, false};
  }
  if (auto v = SpelledNumberValue(w)) {
    // "twenty one".
    if (*v >= 20 && *v < 100 && *v % 10 == 0 && i + 1 < tokens.size()) {
      if (auto unit = UnitValue(tokens[i + 1].lower); unit && *unit <= 9) {
        return NumberMatch{static_cast<double>(*v + *unit), i + 2, false};
      }
    }
    return NumberMatch{static_cast<double>(*v), i + 1, false};
  }
  if (allow_article && (w == "a" || w == "an")) {
    return NumberMatch{1, i + 1, true};
  }
  return std::nullopt;
}

EntityAnnotation MakeMention(std::string_view text,
                             const std::vector<Token> &tokens,
                             std::size_t begin, std::size_t end,
                             EntityType type) {
  EntityAnnotation entity;
  entity.type = type;
  entity.span = {tokens[begin].span.start, tokens[end - 1].span.end};
  entity.surface = std::string(entity.span.text_of(text));
  entity.provenance = Provenance::kAutomatic;
  return entity;
}

}  // namespace epicorpus
