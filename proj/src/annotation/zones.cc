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

#include "epicorpus/annotation/zones.h"

#include <tuple>

namespace epicorpus {

bool IsFloatingZone(std::string_view label) {
  return label == kHeaderFooterZone || label == kFootnoteZone;
}

std::vector<Violation> ValidateZones(const std::vector<ZoneAnnotation> &zones,
                                     const ZoneSchema &schema,
                                     std::optional<std::size_t> text_size) {
  std::vector<Violation> violations;
  for (const ZoneAnnotation &zone : zones) {
    const std::string where = zone.label + " " + DescribeSpan(zone.span);
    if (!schema.Contains(zone.label)) {
      violations.push_back(
          {"unknown-zone-label", "zone label '" + zone.label + "' at " +
                                     DescribeSpan(zone.span) +
                                     " is not in the schema"});
    }
    if (zone.span.start >= zone.span.end) {
      violations.push_back({"empty-span", "zone " + where + " is empty"});
    } else if (text_size && zone.span.end > *text_size) {
      violations.push_back(
          {"span-out-of-bounds", "zone " + where + " exceeds text length " +
                                     std::to_string(*text_size)});
    }
    if (zone.label == kTableZone && !zone.page_number) {
      violations.push_back(
          {"table-without-page", "table zone " + DescribeSpan(zone.span) +
                                     " has no page number"});
    }
  }

  for (std::size_t i = 0; i < zones.size(); ++i) {
    if (IsFloatingZone(zones[i].label)) continue;
    for (std::size_t j = i + 1; j < zones.size(); ++j) {
      if (IsFloatingZone(zones[j].label)) continue;
      if (RelateSpans(zones[i].span, zones[j].span) !=
          SpanRelation::kPartialOverlap) {
        continue;
      }
      // Order the pair so the message is independent of list order.
      const ZoneAnnotation *a = &zones[i];
      const ZoneAnnotation *b = &zones[j];
      if (std::tie(b->span, b->label) < std::tie(a->span, a->label)) {
        std::swap(a, b);
      }
      violations.push_back(
          {"partial-zone-overlap", "zones " + a->label + " " +
                                       DescribeSpan(a->span) + " and " +
                                       b->label + " " + DescribeSpan(b->span) +
                                       " partially overlap"});
    }
  }
  CanonicalizeViolations(violations);
  return violations;
}

}  // namespace epicorpus
