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

#include <charconv>
#include <cstdio>

#include "epicorpus/common/error.h"
#include "epicorpus/common/text_util.h"
#include "epicorpus/corpus/json.h"
#include "epicorpus/index/index.h"

namespace epicorpus {

namespace fs = std::filesystem;

namespace {

std::string Hex(std::uint64_t value) {
  char buffer[17];
  std::snprintf(buffer, sizeof(buffer), "%016llx",
                static_cast<unsigned long long>(value));
  return buffer;
}

std::vector<std::uint32_t> ParseUints(std::string_view s, char sep,
                                      const std::string &where) {
  std::vector<std::uint32_t> out;
  if (s.empty()) return out;
  std::size_t i = 0;
  while (i <= s.size()) {
    std::size_t j = s.find(sep, i);
    if (j == std::string_view::npos) j = s.size();
    std::uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data() + i, s.data() + j, v);
    if (ec != std::errc() || ptr != s.data() + j) {
      throw Error(ErrorKind::kParse, where + ": bad number list");
    }
    out.push_back(v);
    i = j + 1;
  }
  return out;
}

std::vector<std::string> Lines(const std::string &content) {
  std::vector<std::string> lines = Split(content, '\n');
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

}  // namespace

std::string CorpusIndex::OptionsJson() const {
  Json j = {{"exclude_table_zones", options_.exclude_table_zones},
            {"exclude_header_footer", options_.exclude_header_footer},
            {"lexicon_pass", options_.lexicon_pass},
            {"k1", options_.bm25.k1},
            {"b", options_.bm25.b}};
  return j.dump();
}

std::string CorpusIndex::DocumentLine(std::size_t doc) const {
  const StoredDocument &s = docs_[doc];
  Json spans = Json::array();
  for (const Span &p : s.positions) {
    spans.push_back(p.start);
    spans.push_back(p.end);
  }
  Json sentences = Json::array();
  for (const Span &p : s.sentences) {
    sentences.push_back(p.start);
    sentences.push_back(p.end);
  }
  Json excluded = Json::array();
  for (std::size_t p = 0; p < s.posted.size(); ++p) {
    if (!s.posted[p]) excluded.push_back(p);
  }
  Json j = {{"doc", s.doc},
            {"positions", spans},
            {"zone_masks", s.zone_masks},
            {"excluded", excluded},
            {"sentences", sentences},
            {"length", s.length}};
  return j.dump();
}

std::string CorpusIndex::PostingsLine(const std::string &term,
                                      const std::vector<Posting> &postings) {
  std::string line = term + "\t";
  for (std::size_t i = 0; i < postings.size(); ++i) {
    if (i > 0) line += ' ';
    line += std::to_string(postings[i].doc) + ":";
    for (std::size_t k = 0; k < postings[i].positions.size(); ++k) {
      if (k > 0) line += ',';
      line += std::to_string(postings[i].positions[k]);
    }
  }
  return line;
}

std::string CorpusIndex::ComputeVersion() const {
  std::uint64_t h = Fnv1a64(OptionsJson() + "\n");
  for (std::size_t i = 0; i < docs_.size(); ++i) {
    h = Fnv1a64(DocumentLine(i) + "\n", h);
  }
  for (const auto &[term, list] : postings_) {
    h = Fnv1a64(PostingsLine(term, list) + "\n", h);
  }
  return Hex(h);
}

void SaveIndex(const CorpusIndex &index, const fs::path &dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error(ErrorKind::kIo, "cannot create " + dir.string());
  std::string documents;
  for (std::size_t i = 0; i < index.docs_.size(); ++i) {
    documents += index.DocumentLine(i) + "\n";
  }
  std::string postings;
  for (const auto &[term, list] : index.postings_) {
    postings += CorpusIndex::PostingsLine(term, list) + "\n";
  }
  WriteFile(dir / "documents.jsonl", documents);
  WriteFile(dir / "postings.tsv", postings);
  Json manifest = {{"format_version", kIndexFormatVersion},
                   {"doc_count", index.docs_.size()},
                   {"options", Json::parse(index.OptionsJson())},
                   {"index_version", index.version_}};
  WriteFile(dir / "manifest.json", manifest.dump(2) + "\n");
}

std::shared_ptr<const CorpusIndex> LoadIndex(const fs::path &dir) {
  const std::string manifest_path = (dir / "manifest.json").string();
  Json manifest;
  try {
    manifest = Json::parse(ReadFile(dir / "manifest.json"));
  } catch (const Json::exception &e) {
    throw ParseError(manifest_path, 0, e.what());
  }
  auto index = std::make_shared<CorpusIndex>();
  std::string expected_version;
  std::size_t doc_count = 0;
  try {
    if (manifest.at("format_version").get<int>() != kIndexFormatVersion) {
      throw Error(ErrorKind::kParse,
                  manifest_path + ": unsupported index format version " +
                      manifest.at("format_version").dump());
    }
    const Json &o = manifest.at("options");
    index->options_.exclude_table_zones = o.at("exclude_table_zones").get<bool>();
    index->options_.exclude_header_footer =
        o.at("exclude_header_footer").get<bool>();
    index->options_.lexicon_pass = o.at("lexicon_pass").get<bool>();
    index->options_.bm25.k1 = o.at("k1").get<double>();
    index->options_.bm25.b = o.at("b").get<double>();
    doc_count = manifest.at("doc_count").get<std::size_t>();
    expected_version = manifest.at("index_version").get<std::string>();
  } catch (const Json::exception &e) {
    throw ParseError(manifest_path, 0, e.what());
  }

  std::uint64_t h = Fnv1a64(index->OptionsJson() + "\n");
  const std::string documents_path = (dir / "documents.jsonl").string();
  std::size_t line_no = 0;
  for (const std::string &line : Lines(ReadFile(documents_path))) {
    ++line_no;
    h = Fnv1a64(line + "\n", h);
    StoredDocument s;
    try {
      Json j = Json::parse(line);
      s.doc = j.at("doc").get<AnnotatedDocument>();
      auto spans = j.at("positions").get<std::vector<std::size_t>>();
      for (std::size_t k = 0; k + 1 < spans.size(); k += 2) {
        s.positions.push_back(Span{spans[k], spans[k + 1]});
      }
      auto sentences = j.at("sentences").get<std::vector<std::size_t>>();
      for (std::size_t k = 0; k + 1 < sentences.size(); k += 2) {
        s.sentences.push_back(Span{sentences[k], sentences[k + 1]});
      }
      s.zone_masks = j.at("zone_masks").get<std::vector<std::uint32_t>>();
      s.posted.assign(s.positions.size(), true);
      for (std::size_t p : j.at("excluded").get<std::vector<std::size_t>>()) {
        if (p < s.posted.size()) s.posted[p] = false;
      }
      s.length = j.at("length").get<std::uint32_t>();
    } catch (const Json::exception &e) {
      throw ParseError(documents_path, line_no, e.what());
    }
    if (s.zone_masks.size() != s.positions.size()) {
      throw ParseError(documents_path, line_no, "zone masks do not match positions");
    }
    index->docs_.push_back(std::move(s));
  }
  if (index->docs_.size() != doc_count) {
    throw Error(ErrorKind::kParse,
                documents_path + ": manifest lists " + std::to_string(doc_count) +
                    " documents, found " + std::to_string(index->docs_.size()));
  }

  const std::string postings_path = (dir / "postings.tsv").string();
  line_no = 0;
  for (const std::string &line : Lines(ReadFile(postings_path))) {
    ++line_no;
    h = Fnv1a64(line + "\n", h);
    std::size_t tab = line.find('\t');
    if (tab == std::string::npos || tab == 0) {
      throw ParseError(postings_path, line_no, "expected term<TAB>postings");
    }
    std::vector<Posting> list;
    std::string where = postings_path + ":" + std::to_string(line_no);
    for (const std::string &entry : Split(std::string_view(line).substr(tab + 1), ' ')) {
      std::size_t colon = entry.find(':');
      if (colon == std::string::npos) {
        throw ParseError(postings_path, line_no, "expected doc:positions");
      }
      auto doc = ParseUints(std::string_view(entry).substr(0, colon), ',', where);
      if (doc.size() != 1 || doc[0] >= index->docs_.size()) {
        throw ParseError(postings_path, line_no, "bad document number");
      }
      list.push_back(Posting{
          doc[0], ParseUints(std::string_view(entry).substr(colon + 1), ',', where)});
    }
    index->postings_.emplace(line.substr(0, tab), std::move(list));
  }
  if (Hex(h) != expected_version) {
    throw Error(ErrorKind::kParse, dir.string() +
                                       ": index files do not match the "
                                       "manifest version");
  }
  index->version_ = expected_version;
  index->Finalize();
  return index;
}

}  // namespace epicorpus
