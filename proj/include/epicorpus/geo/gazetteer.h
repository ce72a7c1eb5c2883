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

#ifndef EPICORPUS_GEO_GAZETTEER_H_
#define EPICORPUS_GEO_GAZETTEER_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "epicorpus/corpus/model.h"

namespace epicorpus {

struct GazetteerEntry {
  std::int64_t gaz_id = 0;
  std::string name;
  std::vector<std::string> alternate_names;
  double latitude = 0;
  double longitude = 0;
  char feature_class = 'P';  // P populated place, A admin area, ...
  std::int64_t population = 0;

  bool operator==(const GazetteerEntry &) const = default;
};

// Place-name directory. TSV columns: id, name, alternate names separated
// by "|", latitude, longitude, feature class, population. Blank lines and
// "#" comments are skipped. Lookups are case-insensitive over names and
// alternate names.
class Gazetteer {
 public:
  // Bundled gazetteer of places named in the outbreak reports.
  static const Gazetteer &Default();

  static Gazetteer Parse(std::string_view content, const std::string &source);
  static Gazetteer Load(const std::filesystem::path &path);

  // Entries reachable under `name`, in file order. Empty when unknown.
  std::vector<const GazetteerEntry *> Candidates(std::string_view name) const;

  std::size_t size() const { return entries_.size(); }
  const std::vector<GazetteerEntry> &entries() const { return entries_; }

 private:
  std::vector<GazetteerEntry> entries_;
  std::unordered_map<std::string, std::vector<std::size_t>> by_name_;
};

// Lowercased name with whitespace runs collapsed, used as lookup key.
std::string GazetteerKey(std::string_view name);

// Candidate score: log10(population + 1), plus class_bonus for classes P
// and A, plus context_bonus when a context location lies within
// context_radius degrees on both axes. These weights are a heuristic
// stand-in, not a published ranking.
struct GeoScoring {
  double class_bonus = 2.0;
  double context_bonus = 1.0;
  double context_radius = 5.0;
};

struct ScoredCandidate {
  GazetteerEntry entry;
  double score = 0;
};

struct GeoResolution {
  GazetteerEntry chosen;
  double score = 0;
  // All candidates ranked by score desc, population desc, id asc; the
  // first is `chosen`.
  std::vector<ScoredCandidate> alternatives;
};

double ScoreCandidate(const GazetteerEntry &entry,
                      const std::vector<GeoPoint> &context,
                      const GeoScoring &scoring = {});

// Nullopt when the gazetteer has no entry for `name`.
std::optional<GeoResolution> ResolveLocation(
    std::string_view name, const std::vector<GeoPoint> &context,
    const Gazetteer &gazetteer, const GeoScoring &scoring = {});

// Resolves every location entity in text order, using its corrected form,
// with earlier resolutions as context. Sets entity.geo; unresolved
// entities keep geo empty. Manual entities that already carry coordinates
// keep them and serve as context.
void ResolveDocumentLocations(AnnotatedDocument &doc,
                              const Gazetteer &gazetteer,
                              const GeoScoring &scoring = {});

}  // namespace epicorpus

#endif  // EPICORPUS_GEO_GAZETTEER_H_
