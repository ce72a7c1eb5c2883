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

#ifndef EPICORPUS_ANNOTATION_ZONES_H_
#define EPICORPUS_ANNOTATION_ZONES_H_

#include <optional>
#include <vector>

#include "epicorpus/corpus/model.h"
#include "epicorpus/corpus/validate.h"

namespace epicorpus {

// Zone structure checks: labels must come from the schema, zones either
// nest or are disjoint, table zones carry a page number. Header-footer and
// footnote zones may cut across anything. When `text_size` is given, spans
// are also bounds-checked.
std::vector<Violation> ValidateZones(
    const std::vector<ZoneAnnotation> &zones,
    const ZoneSchema &schema = ZoneSchema::Default(),
    std::optional<std::size_t> text_size = std::nullopt);

// True for labels exempt from the nesting rule.
bool IsFloatingZone(std::string_view label);

}  // namespace epicorpus

#endif  // EPICORPUS_ANNOTATION_ZONES_H_
