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

#include "epicorpus/service/service.h"

#include <charconv>
#include <set>
#include <variant>

#include "epicorpus/common/error.h"
#include "epicorpus/common/text_util.h"
#include "epicorpus/corpus/json.h"
#include "epicorpus/index/query.h"

namespace epicorpus {

namespace {

HttpResponse JsonResponse(int status, const Json &body) {
  return HttpResponse{status, "application/json", body.dump()};
}

HttpResponse ErrorResponse(int status, std::string_view kind,
                           const std::string &message) {
  return JsonResponse(status, {{"error", kind}, {"message", message}});
}

HttpResponse NotReady() {
  return ErrorResponse(503, "not_ready", "no index loaded");
}

std::string Param(const QueryParams &params, const std::string &name) {
  auto it = params.find(name);
  return it == params.end() ? std::string() : it->second;
}

// Parses a positive integer parameter; nullopt when malformed.
std::optional<std::size_t> Positive(const std::string &value,
                                    std::size_t fallback) {
  if (value.empty()) return fallback;
  std::size_t out = 0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size() || out == 0) {
    return std::nullopt;
  }
  return out;
}

// Parses q, or returns the 400 response describing why it cannot be.
std::variant<QueryNode, HttpResponse> ParseRequestQuery(const QueryParams &params) {
  std::string q = Param(params, "q");
  try {
    return ParseQuery(q);
  } catch (const QuerySyntaxError &e) {
    return JsonResponse(400, {{"error", ErrorKindName(e.kind())},
                              {"message", e.what()},
                              {"position", e.position()}});
  }
}

Json RegionsJson(const Highlight &h) {
  Json regions = Json::array();
  for (const auto &[page, region] : h.regions) {
    regions.push_back({{"page", page}, {"region", region}});
  }
  return regions;
}

Json PageJson(const std::optional<int> &page) {
  return page ? Json(*page) : Json(nullptr);
}

Json MetadataJson(const DocumentMetadata &m) {
  return {{"doc_id", m.doc_id},
          {"title", m.title},
          {"year", m.publication_year},
          {"main_location", m.main_location ? Json(*m.main_location) : Json(nullptr)},
          {"language", m.language}};
}

bool SafePathPart(const std::string &s) {
  if (s.empty() || s[0] == '.') return false;
  for (char c : s) {
    if (!IsAsciiAlpha(c) && !(c >= '0' && c <= '9') && c != '-' && c != '_' &&
        c != '.') {
      return false;
    }
  }
  return true;
}

}  // namespace

ServiceConfig ConfigFromEnv(
    ServiceConfig base, const std::function<const char *(const char *)> &getenv) {
  if (const char *port = getenv("PORT"); port && *port) {
    int value = 0;
    std::string_view s(port);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size() || value < 0 ||
        value > 65535) {
      throw Error(ErrorKind::kInvalidArgument,
                  "PORT must be a number from 0 to 65535, got '" +
                      std::string(s) + "'");
    }
    base.port = value;
  }
  if (const char *dir = getenv("INDEX_DIR"); dir && *dir) base.index_dir = dir;
  if (const char *dir = getenv("PAGE_IMAGE_DIR"); dir && *dir) {
    base.page_image_dir = dir;
  }
  if (const char *origin = getenv("CORS_ORIGIN"); origin && *origin) {
    base.cors_origin = origin;
  }
  return base;
}

SearchService::SearchService(ServiceConfig config) : config_(std::move(config)) {}

std::shared_ptr<const CorpusIndex> SearchService::Snapshot() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return snapshot_;
}

void SearchService::Swap(std::shared_ptr<const CorpusIndex> index) {
  std::lock_guard<std::mutex> lock(mutex_);
  snapshot_ = std::move(index);
}

bool SearchService::ReloadIfChanged() {
  if (config_.index_dir.empty()) return false;
  std::string version;
  try {
    version = Json::parse(ReadFile(config_.index_dir / "manifest.json"))
                  .at("index_version")
                  .get<std::string>();
  } catch (const Json::exception &e) {
    throw Error(ErrorKind::kParse,
                (config_.index_dir / "manifest.json").string() + ": " + e.what());
  }
  auto current = Snapshot();
  if (current && current->version() == version) return false;
  Swap(LoadIndex(config_.index_dir));
  return true;
}

HttpResponse SearchService::Search(const QueryParams &params) const {
  auto index = Snapshot();
  if (!index) return NotReady();
  auto parsed = ParseRequestQuery(params);
  if (auto *error = std::get_if<HttpResponse>(&parsed)) return *error;
  const QueryNode &query = std::get<QueryNode>(parsed);

  auto page = Positive(Param(params, "page"), 1);
  auto size = Positive(Param(params, "size"), 10);
  if (!page || !size || *size > kMaxPageSize) {
    return ErrorResponse(400, ErrorKindName(ErrorKind::kInvalidArgument),
                         "page must be >= 1 and size between 1 and " +
                             std::to_string(kMaxPageSize));
  }
  std::vector<std::string> facets;
  if (std::string list = Param(params, "facets"); !list.empty()) {
    for (const std::string &raw : Split(list, ',')) {
      std::string name(Trim(raw));
      if (!IsFacetName(name)) {
        return ErrorResponse(422, "invalid_facet", "unknown facet '" + name +
                                                       "'; expected zone, "
                                                       "type, year or location");
      }
      facets.push_back(name);
    }
  } else {
    facets.assign(std::begin(kFacetNames), std::end(kFacetNames));
  }

  SearchResult result = epicorpus::Search(*index, query, *page, *size);
  Json hits = Json::array();
  for (const SearchHit &hit : result.hits) {
    const StoredDocument &s = index->documents()[hit.doc];
    Json snippets = Json::array();
    for (const Highlight &h : HighlightDocument(*index, hit.doc, query)) {
      if (snippets.size() == kSnippetsPerHit) break;
      snippets.push_back({{"text", h.snippet},
                          {"match", h.match},
                          {"char_start", h.span.start},
                          {"char_end", h.span.end},
                          {"page", PageJson(h.page)},
                          {"regions", RegionsJson(h)}});
    }
    hits.push_back({{"doc_id", hit.doc_id},
                    {"title", s.doc.metadata.title},
                    {"year", s.doc.metadata.publication_year},
                    {"score", hit.score},
                    {"snippets", snippets}});
  }
  Json facet_json = Json::object();
  for (const std::string &name : facets) facet_json[name] = result.facets[name];
  return JsonResponse(200, {{"index_version", index->version()},
                            {"query", DescribeQuery(query)},
                            {"total", result.total},
                            {"page", *page},
                            {"size", *size},
                            {"hits", hits},
                            {"facets", facet_json}});
}

HttpResponse SearchService::Document(const std::string &doc_id) const {
  auto index = Snapshot();
  if (!index) return NotReady();
  auto doc = index->Find(doc_id);
  if (!doc) return ErrorResponse(404, "not_found", "no document '" + doc_id + "'");
  const AnnotatedDocument &d = index->documents()[*doc].doc;
  Json zones = Json::array();
  for (const ZoneAnnotation &z : d.zones) {
    zones.push_back({{"label", z.label},
                     {"start", z.span.start},
                     {"end", z.span.end},
                     {"page", PageJson(z.page_number)}});
  }
  Json counts = Json::object();
  for (const EntityAnnotation &e : d.entities) {
    std::string type(EntityTypeName(e.type));
    counts[type] = counts.value(type, 0) + 1;
  }
  std::set<int> pages;
  for (const PageWordBox &b : d.word_boxes) pages.insert(b.page);
  Json body = MetadataJson(d.metadata);
  body["index_version"] = index->version();
  body["length"] = d.text.size();
  body["zones"] = zones;
  body["entity_counts"] = counts;
  body["entity_total"] = d.entities.size();
  body["pages"] = pages;
  return JsonResponse(200, body);
}

HttpResponse SearchService::DocumentSearch(const std::string &doc_id,
                                           const QueryParams &params) const {
  auto index = Snapshot();
  if (!index) return NotReady();
  auto doc = index->Find(doc_id);
  if (!doc) return ErrorResponse(404, "not_found", "no document '" + doc_id + "'");
  auto parsed = ParseRequestQuery(params);
  if (auto *error = std::get_if<HttpResponse>(&parsed)) return *error;
  Json resources = Json::array();
  for (const Highlight &h :
       HighlightDocument(*index, *doc, std::get<QueryNode>(parsed))) {
    Json region = h.regions.empty() ? Json(nullptr) : Json(h.regions.front().second);
    resources.push_back({{"match", h.match},
                         {"page", PageJson(h.page)},
                         {"region", region},
                         {"regions", RegionsJson(h)},
                         {"char_start", h.span.start},
                         {"char_end", h.span.end},
                         {"snippet", h.snippet}});
  }
  return JsonResponse(200, {{"index_version", index->version()},
                            {"doc_id", doc_id},
                            {"resources", resources}});
}

HttpResponse SearchService::Health() const {
  auto index = Snapshot();
  if (!index) {
    return JsonResponse(503, {{"status", "unavailable"}, {"index_version", nullptr}});
  }
  return JsonResponse(200, {{"status", "ok"},
                            {"index_version", index->version()},
                            {"documents", index->size()}});
}

HttpResponse SearchService::PageImage(const std::string &doc_id,
                                      const std::string &page) const {
  if (config_.page_image_dir.empty() || !SafePathPart(doc_id) ||
      page.empty() || !IsAllDigits(page)) {
    return ErrorResponse(404, "not_found", "no such page image");
  }
  auto path = config_.page_image_dir / doc_id / (page + ".png");
  std::error_code ec;
  if (!std::filesystem::is_regular_file(path, ec)) {
    return ErrorResponse(404, "not_found", "no such page image");
  }
  try {
    return HttpResponse{200, "image/png", ReadFile(path)};
  } catch (const Error &e) {
    return ErrorResponse(500, ErrorKindName(e.kind()), e.what());
  }
}

}  // namespace epicorpus
