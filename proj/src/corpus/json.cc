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

#include "epicorpus/corpus/json.h"

#include "epicorpus/common/error.h"
#include "epicorpus/common/text_util.h"

namespace epicorpus {

namespace {

std::string_view FlagName(NormFlag flag) {
  switch (flag) {
    case NormFlag::kNone: return "none";
    case NormFlag::kUnnormalizable: return "unnormalizable";
    case NormFlag::kRelative: return "relative";
  }
  return "none";
}

NormFlag ParseFlag(const std::string &name) {
  if (name == "unnormalizable") return NormFlag::kUnnormalizable;
  if (name == "relative") return NormFlag::kRelative;
  if (name == "none") return NormFlag::kNone;
  throw Error(ErrorKind::kParse, "unknown normalization flag '" + name + "'");
}

}  // namespace

void to_json(Json &j, const Span &span) { j = Json::array({span.start, span.end}); }

void from_json(const Json &j, Span &span) {
  span.start = j.at(0).get<std::size_t>();
  span.end = j.at(1).get<std::size_t>();
}

void to_json(Json &j, const DocumentMetadata &meta) {
  j = Json{{"doc_id", meta.doc_id},
           {"title", meta.title},
           {"publication_year", meta.publication_year},
           {"main_location", meta.main_location ? Json(*meta.main_location)
                                                : Json(nullptr)},
           {"language", meta.language}};
}

void from_json(const Json &j, DocumentMetadata &meta) {
  meta.doc_id = j.at("doc_id").get<std::string>();
  meta.title = j.value("title", std::string());
  meta.publication_year = j.at("publication_year").get<int>();
  meta.main_location.reset();
  if (j.contains("main_location") && !j["main_location"].is_null()) {
    meta.main_location = j["main_location"].get<std::string>();
  }
  meta.language = j.value("language", std::string("en"));
}

void to_json(Json &j, const ZoneAnnotation &zone) {
  j = Json{{"label", zone.label}, {"span", zone.span}};
  if (zone.page_number) j["page"] = *zone.page_number;
}

void from_json(const Json &j, ZoneAnnotation &zone) {
  zone.label = j.at("label").get<std::string>();
  zone.span = j.at("span").get<Span>();
  zone.page_number.reset();
  if (j.contains("page")) zone.page_number = j["page"].get<int>();
}

void to_json(Json &j, const EntityAnnotation &entity) {
  j = Json{{"type", EntityTypeName(entity.type)},
           {"span", entity.span},
           {"surface", entity.surface},
           {"provenance",
            entity.provenance == Provenance::kManual ? "manual" : "automatic"}};
  if (entity.corrected) j["corrected"] = *entity.corrected;
  if (entity.normalized) j["normalized"] = FormatNormalized(*entity.normalized);
  if (entity.flag != NormFlag::kNone) j["flag"] = FlagName(entity.flag);
  if (entity.geo) {
    j["geo"] = Json{{"lat", entity.geo->latitude},
                    {"lon", entity.geo->longitude},
                    {"gaz_id", entity.geo->gaz_id}};
  }
}

void from_json(const Json &j, EntityAnnotation &entity) {
  std::string type_name = j.at("type").get<std::string>();
  auto type = ParseEntityType(type_name);
  if (!type) {
    throw Error(ErrorKind::kUnknownLabel, "unknown entity type '" + type_name + "'");
  }
  entity.type = *type;
  entity.span = j.at("span").get<Span>();
  entity.surface = j.at("surface").get<std::string>();
  entity.provenance = j.value("provenance", std::string("automatic")) == "manual"
                          ? Provenance::kManual
                          : Provenance::kAutomatic;
  entity.corrected.reset();
  if (j.contains("corrected")) entity.corrected = j["corrected"].get<std::string>();
  entity.normalized.reset();
  if (j.contains("normalized")) {
    std::string text = j["normalized"].get<std::string>();
    entity.normalized = ParseNormalized(text);
    if (!entity.normalized) {
      throw Error(ErrorKind::kParse, "bad normalized value '" + text + "'");
    }
  }
  entity.flag = ParseFlag(j.value("flag", std::string("none")));
  entity.geo.reset();
  if (j.contains("geo")) {
    const Json &geo = j["geo"];
    entity.geo = GeoPoint{geo.at("lat").get<double>(), geo.at("lon").get<double>(),
                          geo.at("gaz_id").get<std::int64_t>()};
  }
}

void to_json(Json &j, const PageWordBox &box) {
  j = Json{{"page", box.page}, {"text", box.text}, {"x", box.x},
           {"y", box.y},       {"w", box.w},       {"h", box.h}};
  if (box.char_span) j["span"] = *box.char_span;
}

void from_json(const Json &j, PageWordBox &box) {
  box.page = j.at("page").get<int>();
  box.text = j.at("text").get<std::string>();
  box.x = j.at("x").get<int>();
  box.y = j.at("y").get<int>();
  box.w = j.at("w").get<int>();
  box.h = j.at("h").get<int>();
  box.char_span.reset();
  if (j.contains("span")) box.char_span = j["span"].get<Span>();
}

void to_json(Json &j, const Token &token) {
  j = Json{{"span", token.span}, {"surface", token.surface}};
  if (token.pos) j["pos"] = PosName(*token.pos);
}

void from_json(const Json &j, Token &token) {
  token.span = j.at("span").get<Span>();
  token.surface = j.at("surface").get<std::string>();
  token.lower = ToLower(token.surface);
  token.pos.reset();
  if (j.contains("pos")) token.pos = ParsePos(j["pos"].get<std::string>());
}

void to_json(Json &j, const Sentence &sentence) {
  j = Json{{"span", sentence.span},
           {"tokens", Json::array({sentence.token_begin, sentence.token_end})}};
}

void from_json(const Json &j, Sentence &sentence) {
  sentence.span = j.at("span").get<Span>();
  sentence.token_begin = j.at("tokens").at(0).get<std::size_t>();
  sentence.token_end = j.at("tokens").at(1).get<std::size_t>();
}

void to_json(Json &j, const AnnotatedDocument &doc) {
  j = Json{{"metadata", doc.metadata},     {"text", doc.text},
           {"zones", doc.zones},           {"entities", doc.entities},
           {"word_boxes", doc.word_boxes}, {"tokens", doc.tokens},
           {"sentences", doc.sentences}};
}

void from_json(const Json &j, AnnotatedDocument &doc) {
  doc.metadata = j.at("metadata").get<DocumentMetadata>();
  doc.text = j.at("text").get<std::string>();
  doc.zones = j.value("zones", std::vector<ZoneAnnotation>{});
  doc.entities = j.value("entities", std::vector<EntityAnnotation>{});
  doc.word_boxes = j.value("word_boxes", std::vector<PageWordBox>{});
  doc.tokens = j.value("tokens", std::vector<Token>{});
  doc.sentences = j.value("sentences", std::vector<Sentence>{});
}

DocumentMetadata ParseMetadata(std::string_view content,
                               const std::string &source) {
  try {
    return Json::parse(content).get<DocumentMetadata>();
  } catch (const Json::exception &e) {
    throw ParseError(source, 0, e.what());
  }
}

DocumentMetadata LoadMetadata(const std::filesystem::path &path) {
  return ParseMetadata(ReadFile(path), path.string());
}

}  // namespace epicorpus
