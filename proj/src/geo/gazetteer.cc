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

#include "epicorpus/geo/gazetteer.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>

#include "epicorpus/common/error.h"
#include "epicorpus/common/resources.h"
#include "epicorpus/common/text_util.h"

namespace epicorpus {

namespace {

template <typename T>
std::optional<T> ParseNumber(std::string_view s) {
  T value{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

bool Ranks(const ScoredCandidate &a, const ScoredCandidate &b) {
  if (a.score != b.score) return a.score > b.score;
  if (a.entry.population != b.entry.population) {
    return a.entry.population > b.entry.population;
  }
  return a.entry.gaz_id < b.entry.gaz_id;
}

}  // namespace

std::string GazetteerKey(std::string_view name) {
  std::string key;
  bool pending_space = false;
  for (char c : Trim(name)) {
    if (IsSpace(c)) {
      pending_space = true;
      continue;
    }
    if (pending_space) key += ' ';
    pending_space = false;
    key += c;
  }
  return ToLower(key);
}

Gazetteer Gazetteer::Parse(std::string_view content,
                           const std::string &source) {
  Gazetteer gazetteer;
  std::set<std::int64_t> ids;
  std::size_t line_no = 0;
  for (const std::string &raw : Split(content, '\n')) {
    ++line_no;
    std::string_view line = raw;
    if (EndsWith(line, "\r")) line.remove_suffix(1);
    if (Trim(line).empty() || Trim(line)[0] == '#') continue;
    std::vector<std::string> f = Split(line, '\t');
    if (f.size() != 7) {
      throw ParseError(source, line_no,
                       "expected 7 tab-separated fields, got " +
                           std::to_string(f.size()));
    }
    GazetteerEntry e;
    auto id = ParseNumber<std::int64_t>(Trim(f[0]));
    auto lat = ParseNumber<double>(Trim(f[3]));
    auto lon = ParseNumber<double>(Trim(f[4]));
    auto pop = ParseNumber<std::int64_t>(Trim(f[6]));
    std::string_view cls = Trim(f[5]);
    if (!id) throw ParseError(source, line_no, "bad id '" + f[0] + "'");
    if (!ids.insert(*id).second) {
      throw ParseError(source, line_no, "duplicate id " + std::to_string(*id));
    }
    e.gaz_id = *id;
    e.name = std::string(Trim(f[1]));
    if (e.name.empty()) throw ParseError(source, line_no, "empty name");
    for (const std::string &alt : Split(f[2], '|')) {
      if (!Trim(alt).empty()) e.alternate_names.emplace_back(Trim(alt));
    }
    if (!lat || *lat < -90 || *lat > 90) {
      throw ParseError(source, line_no, "latitude out of range: " + f[3]);
    }
    if (!lon || *lon < -180 || *lon > 180) {
      throw ParseError(source, line_no, "longitude out of range: " + f[4]);
    }
    if (cls.size() != 1 || !IsAsciiAlpha(cls[0])) {
      throw ParseError(source, line_no, "bad feature class '" + f[5] + "'");
    }
    if (!pop || *pop < 0) {
      throw ParseError(source, line_no, "bad population '" + f[6] + "'");
    }
    e.latitude = *lat;
    e.longitude = *lon;
    e.feature_class = cls[0];
    e.population = *pop;

    std::size_t index = gazetteer.entries_.size();
    std::set<std::string> keys = {GazetteerKey(e.name)};
    for (const std::string &alt : e.alternate_names) {
      keys.insert(GazetteerKey(alt));
    }
    for (const std::string &key : keys) {
      gazetteer.by_name_[key].push_back(index);
    }
    gazetteer.entries_.push_back(std::move(e));
  }
  return gazetteer;
}

Gazetteer Gazetteer::Load(const std::filesystem::path &path) {
  return Parse(ReadFile(path), path.string());
}

const Gazetteer &Gazetteer::Default() {
  static const Gazetteer *gazetteer = new Gazetteer(
      Parse(EmbeddedResource("gazetteer.tsv"), "gazetteer.tsv"));
  return *gazetteer;
}

std::vector<const GazetteerEntry *> Gazetteer::Candidates(
    std::string_view name) const {
  std::vector<const GazetteerEntry *> out;
  auto it = by_name_.find(GazetteerKey(name));
  if (it == by_name_.end()) return out;
  for (std::size_t index : it->second) out.push_back(&entries_[index]);
  return out;
}

double ScoreCandidate(const GazetteerEntry &entry,
                      const std::vector<GeoPoint> &context,
                      const GeoScoring &scoring) {
  double score = std::log10(static_cast<double>(entry.population) + 1.0);
  if (entry.feature_class == 'P' || entry.feature_class == 'A') {
    score += scoring.class_bonus;
  }
  for (const GeoPoint &p : context) {
    if (std::abs(p.latitude - entry.latitude) <= scoring.context_radius &&
        std::abs(p.longitude - entry.longitude) <= scoring.context_radius) {
      score += scoring.context_bonus;
      break;
    }
  }
  return score;
}

std::optional<GeoResolution> ResolveLocation(
    std::string_view name, const std::vector<GeoPoint> &context,
    const Gazetteer &gazetteer, const GeoScoring &scoring) {
  auto candidates = gazetteer.Candidates(name);
  if (candidates.empty()) return std::nullopt;
  GeoResolution resolution;
  for (const GazetteerEntry *entry : candidates) {
    resolution.alternatives.push_back(
        {*entry, ScoreCandidate(*entry, context, scoring)});
  }
  std::sort(resolution.alternatives.begin(), resolution.alternatives.end(),
            Ranks);
  resolution.chosen = resolution.alternatives.front().entry;
  resolution.score = resolution.alternatives.front().score;
  return resolution;
}

void ResolveDocumentLocations(AnnotatedDocument &doc,
                              const Gazetteer &gazetteer,
                              const GeoScoring &scoring) {
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < doc.entities.size(); ++i) {
    if (doc.entities[i].type == EntityType::kLocation) order.push_back(i);
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return doc.entities[a].span < doc.entities[b].span;
                   });
  std::vector<GeoPoint> context;
  for (std::size_t i : order) {
    EntityAnnotation &e = doc.entities[i];
    if (e.geo && e.provenance == Provenance::kManual) {
      context.push_back(*e.geo);  // an annotator's choice stands
      continue;
    }
    auto resolution =
        ResolveLocation(e.effective_form(), context, gazetteer, scoring);
    if (!resolution) {
      e.geo.reset();
      continue;
    }
    e.geo = GeoPoint{resolution->chosen.latitude, resolution->chosen.longitude,
                     resolution->chosen.gaz_id};
    context.push_back(*e.geo);
  }
}

}  // namespace epicorpus
