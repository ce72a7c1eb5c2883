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

#include "epicorpus/index/index.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>

#include "epicorpus/common/error.h"
#include "epicorpus/common/text_util.h"
#include "epicorpus/ingest/pipeline.h"
#include "epicorpus/pipeline/tokenizer.h"

namespace epicorpus {

namespace {

std::uint32_t ZoneBit(std::string_view label) {
  int index = ZoneSchema::Default().IndexOf(label);
  return index < 0 ? 0u : (1u << index);
}

// Lexicon entities that no existing annotation covers.
void AddMissedLexiconEntities(AnnotatedDocument &doc, const IndexOptions &options) {
  bool added_location = false;
  for (EntityAnnotation &e :
       MatchLexiconEntities(doc.text, doc.tokens, *options.lexicon)) {
    bool covered = std::any_of(
        doc.entities.begin(), doc.entities.end(),
        [&](const EntityAnnotation &x) { return Overlaps(x.span, e.span); });
    if (covered) continue;
    added_location = added_location || e.type == EntityType::kLocation;
    doc.entities.push_back(std::move(e));
  }
  SortEntities(doc.entities);
  if (added_location) ResolveDocumentLocations(doc, *options.gazetteer);
}

StoredDocument Store(AnnotatedDocument doc, const IndexOptions &options,
                     std::vector<std::string> &terms) {
  EnsureTokenized(doc);
  if (options.lexicon_pass) AddMissedLexiconEntities(doc, options);

  StoredDocument s;
  for (const Token &t : doc.tokens) {
    if (IsPunctuationToken(t)) continue;
    s.positions.push_back(t.span);
    terms.push_back(t.lower);
  }
  s.zone_masks.assign(s.positions.size(), 0);
  for (const ZoneAnnotation &zone : doc.zones) {
    std::uint32_t bit = ZoneBit(zone.label);
    auto it = std::lower_bound(
        s.positions.begin(), s.positions.end(), zone.span.start,
        [](const Span &p, std::size_t start) { return p.start < start; });
    for (; it != s.positions.end() && it->start < zone.span.end; ++it) {
      if (it->end <= zone.span.end) {
        s.zone_masks[static_cast<std::size_t>(it - s.positions.begin())] |= bit;
      }
    }
  }
  std::uint32_t excluded = 0;
  if (options.exclude_table_zones) excluded |= ZoneBit(kTableZone);
  if (options.exclude_header_footer) excluded |= ZoneBit(kHeaderFooterZone);
  s.posted.resize(s.positions.size());
  for (std::size_t p = 0; p < s.positions.size(); ++p) {
    s.posted[p] = (s.zone_masks[p] & excluded) == 0;
    if (s.posted[p]) ++s.length;
  }
  for (const Sentence &sentence : doc.sentences) {
    s.sentences.push_back(sentence.span);
  }
  doc.tokens.clear();
  doc.sentences.clear();
  s.doc = std::move(doc);
  return s;
}

}  // namespace

bool IsFacetName(std::string_view name) {
  for (const char *facet : kFacetNames) {
    if (name == facet) return true;
  }
  return false;
}

const std::vector<Posting> &CorpusIndex::PostingsFor(
    const std::string &term) const {
  static const std::vector<Posting> kNone;
  auto it = postings_.find(term);
  return it == postings_.end() ? kNone : it->second;
}

std::optional<std::uint32_t> CorpusIndex::Find(const std::string &doc_id) const {
  auto it = by_id_.find(doc_id);
  if (it == by_id_.end()) return std::nullopt;
  return it->second;
}

double CorpusIndex::Idf(const std::string &term) const {
  return IdfForCount(PostingsFor(term).size());
}

double CorpusIndex::IdfForCount(std::size_t count) const {
  double n = static_cast<double>(count);
  double total = static_cast<double>(docs_.size());
  return std::log(1.0 + (total - n + 0.5) / (n + 0.5));
}

void CorpusIndex::Finalize() {
  by_id_.clear();
  std::uint64_t total_length = 0;
  for (std::size_t i = 0; i < docs_.size(); ++i) {
    StoredDocument &s = docs_[i];
    by_id_[s.doc.metadata.doc_id] = static_cast<std::uint32_t>(i);
    total_length += s.length;

    s.date_ranges.clear();
    s.geo_points.clear();
    std::set<std::string> labels;
    std::set<EntityType> types;
    for (const ZoneAnnotation &z : s.doc.zones) labels.insert(z.label);
    for (const EntityAnnotation &e : s.doc.entities) {
      types.insert(e.type);
      if (e.geo) s.geo_points.push_back(*e.geo);
      if (!e.normalized) continue;
      if (const auto *p = std::get_if<CalendarPoint>(&*e.normalized)) {
        s.date_ranges.emplace_back(FirstDayOf(*p), LastDayOf(*p));
      } else if (const auto *iv =
                     std::get_if<CalendarInterval>(&*e.normalized)) {
        s.date_ranges.emplace_back(
            iv->start ? FirstDayOf(*iv->start)
                      : std::numeric_limits<std::int64_t>::min(),
            iv->end ? LastDayOf(*iv->end)
                    : std::numeric_limits<std::int64_t>::max());
      }
    }
    s.zone_labels.assign(labels.begin(), labels.end());
    s.entity_types.assign(types.begin(), types.end());

    s.aligned_boxes.clear();
    for (std::size_t b = 0; b < s.doc.word_boxes.size(); ++b) {
      if (s.doc.word_boxes[b].char_span) {
        s.aligned_boxes.push_back(static_cast<std::uint32_t>(b));
      }
    }
    std::stable_sort(s.aligned_boxes.begin(), s.aligned_boxes.end(),
                     [&](std::uint32_t a, std::uint32_t b) {
                       return s.doc.word_boxes[a].char_span->start <
                              s.doc.word_boxes[b].char_span->start;
                     });
  }
  average_length_ = docs_.empty() ? 0.0
                                  : static_cast<double>(total_length) /
                                        static_cast<double>(docs_.size());
  trie_ = FuzzyTrie();
  for (const auto &entry : postings_) trie_.Insert(entry.first);
}

std::shared_ptr<const CorpusIndex> BuildIndex(std::vector<AnnotatedDocument> docs,
                                              const IndexOptions &options) {
  std::sort(docs.begin(), docs.end(),
            [](const AnnotatedDocument &a, const AnnotatedDocument &b) {
              return a.metadata.doc_id < b.metadata.doc_id;
            });
  for (std::size_t i = 1; i < docs.size(); ++i) {
    if (docs[i].metadata.doc_id == docs[i - 1].metadata.doc_id) {
      throw Error(ErrorKind::kConflict,
                  "duplicate doc id '" + docs[i].metadata.doc_id + "'");
    }
  }
  auto index = std::make_shared<CorpusIndex>();
  index->options_ = options;
  index->docs_.reserve(docs.size());
  for (std::size_t i = 0; i < docs.size(); ++i) {
    std::vector<std::string> terms;
    StoredDocument s = Store(std::move(docs[i]), options, terms);
    for (std::size_t p = 0; p < terms.size(); ++p) {
      if (!s.posted[p]) continue;
      auto &list = index->postings_[terms[p]];
      if (list.empty() || list.back().doc != i) {
        list.push_back(Posting{static_cast<std::uint32_t>(i), {}});
      }
      list.back().positions.push_back(static_cast<std::uint32_t>(p));
    }
    index->docs_.push_back(std::move(s));
  }
  index->Finalize();
  index->version_ = index->ComputeVersion();
  return index;
}

// ---- evaluation ----

namespace {

struct Match {
  std::uint32_t pos = 0;
  std::uint32_t len = 1;

  auto operator<=>(const Match &) const = default;
};

struct DocEval {
  double score = 0;
  std::vector<Match> matches;
};

using EvalResult = std::map<std::uint32_t, DocEval>;

class Evaluator {
 public:
  Evaluator(const CorpusIndex &index, std::optional<std::uint32_t> only)
      : index_(index), only_(only) {}

  EvalResult Eval(const QueryNode &node, std::uint32_t zone_mask) const {
    switch (node.kind) {
      case QueryKind::kTerm:
        return Term(node.terms[0], zone_mask, index_.Idf(node.terms[0]));
      case QueryKind::kFuzzy:
        return Fuzzy(node, zone_mask);
      case QueryKind::kPhrase:
        return Phrase(node.terms, zone_mask);
      case QueryKind::kAnd:
        return And(node, zone_mask);
      case QueryKind::kOr: {
        EvalResult out;
        for (const QueryNode &c : node.children) Merge(out, Eval(c, zone_mask));
        return out;
      }
      case QueryKind::kNot:
        return Subtract(Universe(), Eval(node.children[0], zone_mask));
      default:
        return Filter(node);
    }
  }

 private:
  bool Wanted(std::uint32_t doc) const { return !only_ || *only_ == doc; }

  bool InZones(const StoredDocument &s, std::uint32_t pos, std::uint32_t len,
               std::uint32_t mask) const {
    for (std::uint32_t k = 0; k < len; ++k) {
      if ((s.zone_masks[pos + k] & mask) != mask) return false;
    }
    return true;
  }

  double Bm25(double idf, std::size_t tf, std::uint32_t doc) const {
    const Bm25Params &p = index_.options().bm25;
    double avg = index_.average_length() > 0 ? index_.average_length() : 1.0;
    double dl = static_cast<double>(index_.documents()[doc].length);
    double f = static_cast<double>(tf);
    return idf * f * (p.k1 + 1.0) / (f + p.k1 * (1.0 - p.b + p.b * dl / avg));
  }

  EvalResult Term(const std::string &term, std::uint32_t mask,
                  double idf) const {
    EvalResult out;
    for (const Posting &posting : index_.PostingsFor(term)) {
      if (!Wanted(posting.doc)) continue;
      const StoredDocument &s = index_.documents()[posting.doc];
      DocEval eval;
      for (std::uint32_t p : posting.positions) {
        if (InZones(s, p, 1, mask)) eval.matches.push_back({p, 1});
      }
      if (eval.matches.empty()) continue;
      eval.score = Bm25(idf, eval.matches.size(), posting.doc);
      out.emplace(posting.doc, std::move(eval));
    }
    return out;
  }

  // Every expansion is weighted with the idf of the most frequent one, so a
  // rare OCR misspelling does not outrank the word it is a variant of.
  EvalResult Fuzzy(const QueryNode &node, std::uint32_t mask) const {
    EvalResult out;
    std::vector<std::string> terms =
        index_.vocabulary().Expand(node.terms[0], node.max_edits);
    std::size_t df = 0;
    for (const std::string &term : terms) {
      df = std::max(df, index_.PostingsFor(term).size());
    }
    const double idf = index_.IdfForCount(df);
    for (const std::string &term : terms) Merge(out, Term(term, mask, idf));
    return out;
  }

  EvalResult Phrase(const std::vector<std::string> &terms,
                    std::uint32_t mask) const {
    EvalResult out;
    std::vector<const std::vector<Posting> *> lists;
    double idf = 0;
    for (const std::string &t : terms) {
      lists.push_back(&index_.PostingsFor(t));
      if (lists.back()->empty()) return out;
      idf += index_.Idf(t);
    }
    auto find = [](const std::vector<Posting> &list, std::uint32_t doc)
        -> const Posting * {
      auto it = std::lower_bound(
          list.begin(), list.end(), doc,
          [](const Posting &p, std::uint32_t d) { return p.doc < d; });
      return it != list.end() && it->doc == doc ? &*it : nullptr;
    };
    const auto len = static_cast<std::uint32_t>(terms.size());
    for (const Posting &first : *lists[0]) {
      if (!Wanted(first.doc)) continue;
      std::vector<const Posting *> rest;
      for (std::size_t k = 1; k < lists.size(); ++k) {
        const Posting *p = find(*lists[k], first.doc);
        if (!p) break;
        rest.push_back(p);
      }
      if (rest.size() != lists.size() - 1) continue;
      const StoredDocument &s = index_.documents()[first.doc];
      DocEval eval;
      for (std::uint32_t p : first.positions) {
        bool ok = true;
        for (std::uint32_t k = 1; k < len && ok; ++k) {
          const auto &pos = rest[k - 1]->positions;
          ok = std::binary_search(pos.begin(), pos.end(), p + k);
        }
        if (ok && InZones(s, p, len, mask)) eval.matches.push_back({p, len});
      }
      if (eval.matches.empty()) continue;
      eval.score = Bm25(idf, eval.matches.size(), first.doc);
      out.emplace(first.doc, std::move(eval));
    }
    return out;
  }

  EvalResult And(const QueryNode &node, std::uint32_t mask) const {
    for (const QueryNode &c : node.children) {
      if (c.kind == QueryKind::kZone) mask |= ZoneBit(c.value);
    }
    std::optional<EvalResult> acc;
    std::vector<const QueryNode *> negated;
    for (const QueryNode &c : node.children) {
      if (c.kind == QueryKind::kNot) {
        negated.push_back(&c.children[0]);
        continue;
      }
      EvalResult r = Eval(c, mask);
      if (!acc) {
        acc = std::move(r);
        continue;
      }
      EvalResult both;
      for (auto &[doc, eval] : *acc) {
        auto it = r.find(doc);
        if (it == r.end()) continue;
        eval.score += it->second.score;
        eval.matches.insert(eval.matches.end(), it->second.matches.begin(),
                            it->second.matches.end());
        both.emplace(doc, std::move(eval));
      }
      acc = std::move(both);
    }
    EvalResult out = acc ? std::move(*acc) : Universe();
    for (const QueryNode *n : negated) out = Subtract(std::move(out), Eval(*n, mask));
    return out;
  }

  EvalResult Filter(const QueryNode &node) const {
    EvalResult out;
    const auto &docs = index_.documents();
    for (std::uint32_t d = 0; d < docs.size(); ++d) {
      if (Wanted(d) && Accepts(node, docs[d])) out.emplace(d, DocEval{});
    }
    return out;
  }

  static bool Accepts(const QueryNode &node, const StoredDocument &s) {
    switch (node.kind) {
      case QueryKind::kZone:
        return std::binary_search(s.zone_labels.begin(), s.zone_labels.end(),
                                  node.value);
      case QueryKind::kType:
        return std::binary_search(s.entity_types.begin(),
                                  s.entity_types.end(), node.entity_type);
      case QueryKind::kYear:
        return s.doc.metadata.publication_year >= node.year_from &&
               s.doc.metadata.publication_year <= node.year_to;
      case QueryKind::kDate:
        return std::any_of(s.date_ranges.begin(), s.date_ranges.end(),
                           [&](const auto &r) {
                             return r.first <= node.day_to &&
                                    node.day_from <= r.second;
                           });
      case QueryKind::kGeo:
        return std::any_of(s.geo_points.begin(), s.geo_points.end(),
                           [&](const GeoPoint &g) {
                             return node.box.Contains(g.latitude, g.longitude);
                           });
      case QueryKind::kLocation:
        return s.doc.metadata.main_location &&
               ToLower(*s.doc.metadata.main_location) == ToLower(node.value);
      default:
        return false;
    }
  }

  EvalResult Universe() const {
    EvalResult out;
    for (std::uint32_t d = 0; d < index_.size(); ++d) {
      if (Wanted(d)) out.emplace(d, DocEval{});
    }
    return out;
  }

  static void Merge(EvalResult &into, EvalResult from) {
    for (auto &[doc, eval] : from) {
      DocEval &target = into[doc];
      target.score += eval.score;
      target.matches.insert(target.matches.end(), eval.matches.begin(),
                            eval.matches.end());
    }
  }

  static EvalResult Subtract(EvalResult from, const EvalResult &remove) {
    for (const auto &entry : remove) from.erase(entry.first);
    return from;
  }

  const CorpusIndex &index_;
  std::optional<std::uint32_t> only_;
};

std::string CleanSnippet(std::string_view text) {
  std::string out(text);
  for (char &c : out) {
    if (c == '\n' || c == '\r' || c == '\t') c = ' ';
  }
  return std::string(Trim(out));
}

std::string Snippet(const StoredDocument &s, const Span &match) {
  std::string_view text = s.doc.text;
  Span extent{0, text.size()};
  auto it = std::upper_bound(
      s.sentences.begin(), s.sentences.end(), match.start,
      [](std::size_t start, const Span &sentence) { return start < sentence.start; });
  if (it != s.sentences.begin() && std::prev(it)->end > match.start) {
    extent = *std::prev(it);
  }
  if (extent.length() <= kSnippetLimit) return CleanSnippet(extent.text_of(text));
  std::size_t center = (match.start + match.end) / 2;
  std::size_t begin = center > kSnippetLimit / 2 ? center - kSnippetLimit / 2 : 0;
  begin = std::clamp(begin, extent.start, extent.end - kSnippetLimit);
  std::size_t end = begin + kSnippetLimit;
  begin = Utf8Floor(text, begin);
  if (begin < extent.start) begin = extent.start;
  end = Utf8Floor(text, end);
  return CleanSnippet(text.substr(begin, end - begin));
}

}  // namespace

std::string FormatRegion(const std::vector<const PageWordBox *> &boxes) {
  if (boxes.empty()) return "";
  int x0 = std::numeric_limits<int>::max(), y0 = x0;
  int x1 = std::numeric_limits<int>::min(), y1 = x1;
  for (const PageWordBox *b : boxes) {
    x0 = std::min(x0, b->x);
    y0 = std::min(y0, b->y);
    x1 = std::max(x1, b->x + b->w);
    y1 = std::max(y1, b->y + b->h);
  }
  return std::to_string(x0) + "," + std::to_string(y0) + "," +
         std::to_string(x1 - x0) + "," + std::to_string(y1 - y0);
}

SearchResult Search(const CorpusIndex &index, const QueryNode &query,
                    std::size_t page, std::size_t page_size) {
  EvalResult matched = Evaluator(index, std::nullopt).Eval(query, 0);
  SearchResult result;
  for (const char *facet : kFacetNames) result.facets[facet];
  std::vector<SearchHit> hits;
  hits.reserve(matched.size());
  for (const auto &[doc, eval] : matched) {
    const StoredDocument &s = index.documents()[doc];
    hits.push_back(SearchHit{doc, s.doc.metadata.doc_id, eval.score});
    for (const std::string &label : s.zone_labels) ++result.facets["zone"][label];
    for (EntityType t : s.entity_types) {
      ++result.facets["type"][std::string(EntityTypeName(t))];
    }
    ++result.facets["year"][std::to_string(s.doc.metadata.publication_year)];
    if (s.doc.metadata.main_location) {
      ++result.facets["location"][*s.doc.metadata.main_location];
    }
  }
  std::sort(hits.begin(), hits.end(), [](const SearchHit &a, const SearchHit &b) {
    if (a.score != b.score) return a.score > b.score;
    return a.doc_id < b.doc_id;
  });
  result.total = hits.size();
  if (page == 0) page = 1;
  std::size_t from = (page - 1) * page_size;
  if (from < hits.size()) {
    std::size_t to = std::min(hits.size(), from + page_size);
    result.hits.assign(hits.begin() + static_cast<std::ptrdiff_t>(from),
                       hits.begin() + static_cast<std::ptrdiff_t>(to));
  }
  return result;
}

std::vector<Highlight> HighlightDocument(const CorpusIndex &index,
                                         std::uint32_t doc,
                                         const QueryNode &query) {
  std::vector<Highlight> out;
  if (doc >= index.size()) return out;
  EvalResult matched = Evaluator(index, doc).Eval(query, 0);
  auto it = matched.find(doc);
  if (it == matched.end()) return out;
  std::vector<Match> matches = it->second.matches;
  std::sort(matches.begin(), matches.end());
  matches.erase(std::unique(matches.begin(), matches.end()), matches.end());

  const StoredDocument &s = index.documents()[doc];
  const auto &boxes = s.doc.word_boxes;
  for (const Match &m : matches) {
    Highlight h;
    h.span = Span{s.positions[m.pos].start, s.positions[m.pos + m.len - 1].end};
    h.match = std::string(h.span.text_of(s.doc.text));
    h.snippet = Snippet(s, h.span);
    std::map<int, std::vector<const PageWordBox *>> by_page;
    auto first = std::lower_bound(
        s.aligned_boxes.begin(), s.aligned_boxes.end(), h.span.end,
        [&](std::uint32_t b, std::size_t end) {
          return boxes[b].char_span->start < end;
        });
    // Boxes never overlap, so at most one box starting before the match
    // can still reach into it.
    auto begin = first;
    while (begin != s.aligned_boxes.begin() &&
           boxes[*std::prev(begin)].char_span->end > h.span.start) {
      --begin;
    }
    for (auto b = begin; b != first; ++b) {
      if (Overlaps(*boxes[*b].char_span, h.span)) {
        by_page[boxes[*b].page].push_back(&boxes[*b]);
      }
    }
    for (const auto &[page, page_boxes] : by_page) {
      h.regions.emplace_back(page, FormatRegion(page_boxes));
    }
    if (!h.regions.empty()) h.page = h.regions.front().first;
    out.push_back(std::move(h));
  }
  return out;
}

}  // namespace epicorpus
