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

#ifndef EPICORPUS_NER_MEASUREMENTS_H_
#define EPICORPUS_NER_MEASUREMENTS_H_

#include <optional>
#include <string_view>
#include <vector>

#include "epicorpus/corpus/model.h"

namespace epicorpus {

inline constexpr double kMetersPerMile = 1609.344;
inline constexpr double kMetersPerYard = 0.9144;
inline constexpr double kMetersPerFoot = 0.3048;
inline constexpr double kMetersPerKilometre = 1000.0;

// Meters per unit for "mile(s)", "yard(s)", "foot"/"feet", "metre(s)",
// "meter(s)", "km", "kilometre(s)", "kilometer(s)".
std::optional<double> MetersPerUnit(std::string_view lower_word);

// Distances ("20 miles", "six miles", "a mile") and percentages ("8%",
// "25 per cent", "ten percent"). The sentence period after "per cent." is
// not part of the mention.
std::vector<EntityAnnotation> RecognizeMeasurements(
    std::string_view text, const std::vector<Token> &tokens);

}  // namespace epicorpus

#endif  // EPICORPUS_NER_MEASUREMENTS_H_
