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

#ifndef EPICORPUS_INDEX_INDEX_H_
#define EPICORPUS_INDEX_INDEX_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "epicorpus/corpus/model.h"
#include "epicorpus/geo/gazetteer.h"
#include "epicorpus/index/fuzzy.h"
#include "epicorpus/index/query.h"
#include "epicorpus/ner/lexicon.h"

namespace epicorpus {

struct Bm25Params {
  double k1 = 1.2;
  double b = 0.75;
};

struct IndexOptions {
  bool exclude_table_zones = true;
  bool exclude_header_footer = true;
  // Adds lexicon entities the annotation missed before indexing.
  bool lexicon_pass = true;
  Bm25Params bm25;
  const EntityLexicon *lexicon = &EntityLexicon::Default();
  const Gazetteer *gazetteer = &Gazetteer::Default();
};

// A document as the index keeps it. Positions number the non-punctuation
// tokens of the text; tokens inside excluded zones keep their position but
// are not posted, so phrases never bridge an excluded stretch.
struct StoredDocument {
  AnnotatedDocument doc;             // tokens and sentences dropped
  std::vector<Span> sentences;       // sentence extents
  std::vector<Span> positions;       // char span of each position
  std::vector<std::uint32_t> zone_masks;  // schema label bits per position
  std::vector<bool> posted;          // false inside excluded zones
  std::uint32_t length = 0;          // posted positions (BM25 length)

  // Derived on load.
  std::vector<std::pair<std::int64_t, std::int64_t>> date_ranges;  // days
  std::vector<GeoPoint> geo_points;
  std::vector<std::string> zone_labels;  // distinct, sorted
  std::vector<EntityType> entity_types;  // distinct, sorted
  std::vector<std::uint32_t> aligned_boxes;  // by char_span start
};

struct Posting {
  std::uint32_t doc = 0;
  std::vector<std::uint32_t> positions;  // ascending

  bool operator==(const Posting &) const = default;
};

class CorpusIndex {
 public:
  const std::vector<StoredDocument> &documents() const { return docs_; }
  std::size_t size() const { return docs_.size(); }
  const IndexOptions &options() const { return options_; }
  const std::string &version() const { return version_; }
  double average_length() const { return average_length_; }

  // Empty when the term is absent.
  const std::vector<Posting> &PostingsFor(const std::string &term) const;
  const std::map<std::string, std::vector<Posting>> &postings() const {
    return postings_;
  }
  const FuzzyTrie &vocabulary() const { return trie_; }
  std::optional<std::uint32_t> Find(const std::string &doc_id) const;

  // ln(1 + (N - n + 0.5) / (n + 0.5)) for a term in n of N documents.
  double Idf(const std::string &term) const;
  // The same for a document frequency of n.
  double IdfForCount(std::size_t n) const;

 private:
  friend std::shared_ptr<const CorpusIndex> BuildIndex(
      std::vector<AnnotatedDocument> docs, const IndexOptions &options);
  friend std::shared_ptr<const CorpusIndex> LoadIndex(
      const std::filesystem::path &dir);
  friend void SaveIndex(const CorpusIndex &index,
                        const std::filesystem::path &dir);
  void Finalize();
  std::string OptionsJson() const;
  std::string DocumentLine(std::size_t doc) const;
  static std::string PostingsLine(const std::string &term,
                                  const std::vector<Posting> &postings);
  std::string ComputeVersion() const;

  IndexOptions options_;
  std::vector<StoredDocument> docs_;  // sorted by doc_id
  std::map<std::string, std::vector<Posting>> postings_;
  std::unordered_map<std::string, std::uint32_t> by_id_;
  FuzzyTrie trie_;
  double average_length_ = 0;
  std::string version_;
};

// Sorts documents by id, applies the ingestion exclusions, runs the
// optional lexicon pass and builds postings. Throws Error(kConflict) on a
// duplicate doc id.
std::shared_ptr<const CorpusIndex> BuildIndex(std::vector<AnnotatedDocument> docs,
                                              const IndexOptions &options = {});

// On-disk layout (all UTF-8):
//   manifest.json    {"format_version", "doc_count", "options",
//                     "index_version"}
//   documents.jsonl  one stored document per line, in index order
//   postings.tsv     term<TAB>doc:pos,pos<SPACE>doc:pos ... sorted by term
// index_version is the FNV-1a 64 hash of the options and both data files;
// LoadIndex recomputes it and rejects a mismatch.
inline constexpr int kIndexFormatVersion = 1;
void SaveIndex(const CorpusIndex &index, const std::filesystem::path &dir);
std::shared_ptr<const CorpusIndex> LoadIndex(const std::filesystem::path &dir);

// ---- search ----

struct Highlight {
  Span span;                  // matched text
  std::string match;          // text at span
  std::string snippet;        // containing sentence, at most kSnippetLimit
  std::optional<int> page;    // first page with a word box, if any
  std::vector<std::pair<int, std::string>> regions;  // page -> "x,y,w,h"
};

inline constexpr std::size_t kSnippetLimit = 240;

struct SearchHit {
  std::uint32_t doc = 0;
  std::string doc_id;
  double score = 0;
};

// facet name -> value -> number of matching documents.
using FacetCounts = std::map<std::string, std::map<std::string, std::size_t>>;

inline constexpr const char *kFacetNames[] = {"zone", "type", "year",
                                               "location"};
bool IsFacetName(std::string_view name);

struct SearchResult {
  std::size_t total = 0;
  std::vector<SearchHit> hits;  // the requested page only
  FacetCounts facets;           // over every match, not just the page
};

// Ranks by BM25 (score descending, doc id ascending). `page` is 1-based.
SearchResult Search(const CorpusIndex &index, const QueryNode &query,
                    std::size_t page = 1, std::size_t page_size = 10);

// One highlight per match of the query's positional parts in `doc`, in
// text order. Empty when the document does not satisfy the query.
std::vector<Highlight> HighlightDocument(const CorpusIndex &index,
                                         std::uint32_t doc,
                                         const QueryNode &query);

// Bounding box of the boxes, "x,y,w,h".
std::string FormatRegion(const std::vector<const PageWordBox *> &boxes);

}  // namespace epicorpus

#endif  // EPICORPUS_INDEX_INDEX_H_
