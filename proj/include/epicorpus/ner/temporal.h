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

#ifndef EPICORPUS_NER_TEMPORAL_H_
#define EPICORPUS_NER_TEMPORAL_H_

#include <string_view>
#include <vector>

#include "epicorpus/corpus/model.h"

namespace epicorpus {

// Bare four-digit numbers count as years only inside this window, which
// keeps page and case numbers out.
inline constexpr int kBareYearMin = 1850;
inline constexpr int kBareYearMax = 1960;

// Rule grammar for dates, date ranges, clock times and durations.
//
//   date        "4th February 1897", "March 1897", "1898", "February 4, 1897"
//   date-range  "1900-1907", "1894-6", "July 1898 to March 1899",
//               "4th to 10th May 1897", "between 1896 and 1898",
//               "since September 1896" (open end), "until 1899" (open start)
//   relative    "next day", "the beginning of June" (date, flagged relative)
//   time        "8 a.m.", "4:30 p.m.", "noon", "midnight", "6 o'clock"
//   duration    "ten days", "48 hours", "a week", "half an hour";
//               "months", "several weeks", "winter", "a long time" are
//               flagged unnormalizable
//
// A range endpoint without a year takes it from the other endpoint
// (shifted by one when that would invert the range); when neither side
// has one, and for single dates without one, `pub_year` is used. Matches
// are longest-first, left to right, and never overlap.
std::vector<EntityAnnotation> RecognizeTemporal(
    std::string_view text, const std::vector<Token> &tokens, int pub_year);

}  // namespace epicorpus

#endif  // EPICORPUS_NER_TEMPORAL_H_
