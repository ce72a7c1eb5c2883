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

// JSON mapping for the corpus model (metadata files, processed documents,
// stored index fields).

#ifndef EPICORPUS_CORPUS_JSON_H_
#define EPICORPUS_CORPUS_JSON_H_

#include <filesystem>

#include "epicorpus/corpus/model.h"
#include "json.hpp"

namespace epicorpus {

using Json = nlohmann::json;

void to_json(Json &j, const Span &span);
void from_json(const Json &j, Span &span);
void to_json(Json &j, const DocumentMetadata &meta);
void from_json(const Json &j, DocumentMetadata &meta);
void to_json(Json &j, const ZoneAnnotation &zone);
void from_json(const Json &j, ZoneAnnotation &zone);
void to_json(Json &j, const EntityAnnotation &entity);
void from_json(const Json &j, EntityAnnotation &entity);
void to_json(Json &j, const PageWordBox &box);
void from_json(const Json &j, PageWordBox &box);
void to_json(Json &j, const Token &token);
void from_json(const Json &j, Token &token);
void to_json(Json &j, const Sentence &sentence);
void from_json(const Json &j, Sentence &sentence);
void to_json(Json &j, const AnnotatedDocument &doc);
void from_json(const Json &j, AnnotatedDocument &doc);

// Metadata JSON file: {"doc_id","title","publication_year","main_location",
// "language"}. Throws ParseError on malformed input.
DocumentMetadata LoadMetadata(const std::filesystem::path &path);
DocumentMetadata ParseMetadata(std::string_view content,
                               const std::string &source = "<metadata>");

}  // namespace epicorpus

#endif  // EPICORPUS_CORPUS_JSON_H_
