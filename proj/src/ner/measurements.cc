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

#include "epicorpus/ner/measurements.h"

#include "epicorpus/ner/mention.h"

namespace epicorpus {

std::optional<double> MetersPerUnit(std::string_view w) {
  if (w == "mile" || w == "miles") return kMetersPerMile;
  if (w == "yard" || w == "yards") return kMetersPerYard;
  if (w == "foot" || w == "feet") return kMetersPerFoot;
  if (w == "metre" || w == "metres" || w == "meter" || w == "meters") {
    return 1.0;
  }
  if (w == "km" || w == "kilometre" || w == "kilometres" ||
      w == "kilometer" || w == "kilometers") {
    return kMetersPerKilometre;
  }
  return std::nullopt;
}

std::vector<EntityAnnotation> RecognizeMeasurements(
    std::string_view text, const std::vector<Token> &tokens) {
  std::vector<EntityAnnotation> out;
  std::size_t i = 0;
  while (i < tokens.size()) {
    auto number = ParseNumberAt(tokens, i, true);
    if (!number || number->value <= 0) {
      ++i;
      continue;
    }
    std::size_t j = number->end;
    if (j < tokens.size()) {
      if (auto meters = MetersPerUnit(tokens[j].lower)) {
        EntityAnnotation e =
            MakeMention(text, tokens, i, j + 1, EntityType::kDistance);
        e.normalized = Length{number->value * *meters};
        out.push_back(std::move(e));
        i = j + 1;
        continue;
      }
      if (!number->article) {
        std::size_t end = 0;
        if (tokens[j].lower == "%" || tokens[j].lower == "percent") {
          end = j + 1;
        } else if (tokens[j].lower == "per" && TokenIs(tokens, j + 1, "cent")) {
          end = j + 2;
        }
        if (end) {
          EntityAnnotation e =
              MakeMention(text, tokens, i, end, EntityType::kPercent);
          e.normalized = Percentage{number->value};
          out.push_back(std::move(e));
          i = end;
          continue;
        }
      }
    }
    ++i;
  }
  return out;
}

}  // namespace epicorpus
