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

#ifndef EPICORPUS_ANNOTATION_ALTO_H_
#define EPICORPUS_ANNOTATION_ALTO_H_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "epicorpus/corpus/model.h"

namespace epicorpus {

// Word boxes from the String elements of an ALTO page, in document order.
// Namespaced element names are matched on their local part. Coordinates are
// rounded to whole pixels; char_span is left unset. Throws
// Error(kParse) for malformed XML or a String lacking CONTENT, HPOS, VPOS,
// WIDTH or HEIGHT.
std::vector<PageWordBox> ParseAlto(std::string_view xml, int page,
                                   const std::string &source = "<alto>");

// Page number encoded in a "<doc_id>_p<page>.xml" file name, if the name
// follows that pattern for the given document.
std::optional<int> AltoPageFromFilename(const std::filesystem::path &path,
                                        std::string_view doc_id);

}  // namespace epicorpus

#endif  // EPICORPUS_ANNOTATION_ALTO_H_
