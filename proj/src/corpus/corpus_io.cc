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

#include "epicorpus/corpus/corpus_io.h"

#include <algorithm>

#include "epicorpus/annotation/alto.h"
#include "epicorpus/common/error.h"
#include "epicorpus/common/text_util.h"
#include "epicorpus/corpus/json.h"

namespace epicorpus {

namespace fs = std::filesystem;

std::vector<fs::path> ListCorpusDocuments(const fs::path &corpus_dir) {
  if (!fs::is_directory(corpus_dir)) {
    throw Error(ErrorKind::kIo,
                "corpus directory not found: " + corpus_dir.string());
  }
  std::vector<fs::path> out;
  for (const auto &entry : fs::directory_iterator(corpus_dir)) {
    if (entry.is_directory() && fs::exists(entry.path() / "text.txt")) {
      out.push_back(entry.path());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

RawDocument LoadRawDocument(const fs::path &dir) {
  RawDocument raw;
  raw.source = dir.string();
  raw.text = ReadFile(dir / "text.txt");
  raw.metadata = LoadMetadata(dir / "meta.json");
  std::string name = dir.filename().string();
  if (name.empty()) name = dir.parent_path().filename().string();
  if (raw.metadata.doc_id != name) {
    throw Error(ErrorKind::kValidation,
                raw.source + ": meta.json doc_id '" + raw.metadata.doc_id +
                    "' does not match the directory name");
  }
  if (fs::exists(dir / "ann.ann")) raw.ann = ReadFile(dir / "ann.ann");
  if (fs::is_directory(dir / "alto")) {
    for (const auto &entry : fs::directory_iterator(dir / "alto")) {
      auto page = AltoPageFromFilename(entry.path(), raw.metadata.doc_id);
      if (page) raw.alto_pages.emplace_back(*page, ReadFile(entry.path()));
    }
    std::sort(raw.alto_pages.begin(), raw.alto_pages.end(),
              [](const auto &a, const auto &b) { return a.first < b.first; });
  }
  return raw;
}

void SaveProcessedDocument(const fs::path &path, const AnnotatedDocument &doc) {
  WriteFile(path, Json(doc).dump(1) + "\n");
}

AnnotatedDocument LoadProcessedDocument(const fs::path &path) {
  std::string content = ReadFile(path);
  try {
    return Json::parse(content).get<AnnotatedDocument>();
  } catch (const Json::exception &e) {
    throw ParseError(path.string(), 0, e.what());
  }
}

std::vector<AnnotatedDocument> LoadProcessedDirectory(const fs::path &dir) {
  if (!fs::is_directory(dir)) {
    throw Error(ErrorKind::kIo, "directory not found: " + dir.string());
  }
  std::vector<fs::path> files;
  for (const auto &entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  std::vector<AnnotatedDocument> docs;
  docs.reserve(files.size());
  for (const auto &file : files) docs.push_back(LoadProcessedDocument(file));
  return docs;
}

}  // namespace epicorpus
