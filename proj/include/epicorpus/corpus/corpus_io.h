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

#ifndef EPICORPUS_CORPUS_CORPUS_IO_H_
#define EPICORPUS_CORPUS_CORPUS_IO_H_

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "epicorpus/corpus/model.h"

namespace epicorpus {

// One report as found on disk, before any processing:
//
//   corpus/<doc_id>/text.txt       OCR text (UTF-8)
//   corpus/<doc_id>/meta.json      DocumentMetadata
//   corpus/<doc_id>/ann.ann        optional manual standoff annotations
//   corpus/<doc_id>/alto/<doc_id>_p<page>.xml   optional ALTO pages
struct RawDocument {
  std::string source;  // directory, for messages
  DocumentMetadata metadata;
  std::string text;
  std::optional<std::string> ann;
  std::vector<std::pair<int, std::string>> alto_pages;  // sorted by page
};

// Document directories (those holding a text.txt) under corpus_dir,
// sorted by name.
std::vector<std::filesystem::path> ListCorpusDocuments(
    const std::filesystem::path &corpus_dir);

// Throws Error(kIo) for missing files and Error(kValidation) when the
// directory name and the metadata doc_id disagree.
RawDocument LoadRawDocument(const std::filesystem::path &dir);

// Processed documents are stored one JSON file per document.
void SaveProcessedDocument(const std::filesystem::path &path,
                           const AnnotatedDocument &doc);
AnnotatedDocument LoadProcessedDocument(const std::filesystem::path &path);
// Every *.json file in dir, sorted by file name.
std::vector<AnnotatedDocument> LoadProcessedDirectory(
    const std::filesystem::path &dir);

}  // namespace epicorpus

#endif  // EPICORPUS_CORPUS_CORPUS_IO_H_
