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

// Core domain types for annotated outbreak reports: zones, entities with
// normalized values, OCR word boxes and pipeline tokens.

#ifndef EPICORPUS_CORPUS_MODEL_H_
#define EPICORPUS_CORPUS_MODEL_H_

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "epicorpus/corpus/span.h"

namespace epicorpus {

// ---------------------------------------------------------------------------
// Entity types

enum class EntityType {
  kPerson,
  kLocation,
  kGeographicFeature,
  kPlagueOntologyTerm,
  kDate,
  kDateRange,
  kTime,
  kDuration,
  kDistance,
  kPopulation,
  kPercent,
};

inline constexpr std::array<EntityType, 11> kAllEntityTypes = {
    EntityType::kPerson,     EntityType::kLocation,
    EntityType::kGeographicFeature, EntityType::kPlagueOntologyTerm,
    EntityType::kDate,       EntityType::kDateRange,
    EntityType::kTime,       EntityType::kDuration,
    EntityType::kDistance,   EntityType::kPopulation,
    EntityType::kPercent,
};

std::string_view EntityTypeName(EntityType type);
std::optional<EntityType> ParseEntityType(std::string_view name);

// Types that must carry a normalized value or an explicit flag.
bool RequiresNormalization(EntityType type);

// ---------------------------------------------------------------------------
// Zones

// The closed set of zone labels. Labels are kept as strings on
// ZoneAnnotation so that out-of-schema input can be reported rather than
// silently dropped.
class ZoneSchema {
 public:
  static const ZoneSchema &Default();

  explicit ZoneSchema(std::vector<std::string> labels);

  bool Contains(std::string_view label) const;
  const std::vector<std::string> &labels() const { return labels_; }
  // Position of the label in labels(), or -1.
  int IndexOf(std::string_view label) const;

 private:
  std::vector<std::string> labels_;
};

inline constexpr std::string_view kTableZone = "table";
inline constexpr std::string_view kHeaderFooterZone = "header-footer";
inline constexpr std::string_view kFootnoteZone = "footnote";

struct ZoneAnnotation {
  std::string label;
  Span span;
  std::optional<int> page_number;

  bool operator==(const ZoneAnnotation &) const = default;
};

// ---------------------------------------------------------------------------
// Normalized values

enum class Granularity { kYear, kMonth, kDay };

struct CalendarPoint {
  int year = 0;
  std::optional<int> month;
  std::optional<int> day;
  Granularity granularity = Granularity::kYear;

  static CalendarPoint Year(int year);
  static CalendarPoint Month(int year, int month);
  static CalendarPoint Day(int year, int month, int day);

  bool operator==(const CalendarPoint &) const = default;
};

struct CalendarInterval {
  std::optional<CalendarPoint> start;  // absent iff open_start
  std::optional<CalendarPoint> end;    // absent iff open_end
  bool open_start = false;
  bool open_end = false;

  bool operator==(const CalendarInterval &) const = default;
};

struct ClockTime {
  int hour = 0;
  int minute = 0;

  bool operator==(const ClockTime &) const = default;
};

enum class DurationUnit { kHour, kDay, kWeek, kMonth, kYear };

std::string_view DurationUnitName(DurationUnit unit);
std::optional<DurationUnit> ParseDurationUnit(std::string_view name);

struct Duration {
  double magnitude = 0;
  DurationUnit unit = DurationUnit::kDay;

  bool operator==(const Duration &) const = default;
};

struct Length {
  double meters = 0;

  bool operator==(const Length &) const = default;
};

struct Percentage {
  double value = 0;

  bool operator==(const Percentage &) const = default;
};

using NormalizedValue = std::variant<CalendarPoint, CalendarInterval,
                                     ClockTime, Duration, Length, Percentage>;

// Compact single-token rendering, e.g. "point:1897-02-04",
// "interval:1896-09..", "time:08:00", "duration:10:day", "length:9656.064",
// "percent:25". Used by the standoff attribute lines and the CLI.
std::string FormatNormalized(const NormalizedValue &value);
std::optional<NormalizedValue> ParseNormalized(std::string_view text);

std::string FormatCalendarPoint(const CalendarPoint &point);
std::optional<CalendarPoint> ParseCalendarPoint(std::string_view text);

// Calendar helpers. Day numbers count days since 1970-01-01 (proleptic
// Gregorian).
bool IsLeapYear(int year);
int DaysInMonth(int year, int month);
std::int64_t DaysFromCivil(int year, int month, int day);
std::int64_t FirstDayOf(const CalendarPoint &point);
std::int64_t LastDayOf(const CalendarPoint &point);

// Why an entity that needs a value has none.
enum class NormFlag { kNone, kUnnormalizable, kRelative };

// ---------------------------------------------------------------------------
// Entities

enum class Provenance { kAutomatic, kManual };

struct GeoPoint {
  double latitude = 0;
  double longitude = 0;
  std::int64_t gaz_id = 0;

  bool operator==(const GeoPoint &) const = default;
};

struct EntityAnnotation {
  EntityType type = EntityType::kLocation;
  Span span;
  std::string surface;
  std::optional<std::string> corrected;
  std::optional<NormalizedValue> normalized;
  NormFlag flag = NormFlag::kNone;
  Provenance provenance = Provenance::kAutomatic;
  std::optional<GeoPoint> geo;

  // The form downstream stages should read: the correction when present.
  const std::string &effective_form() const {
    return corrected ? *corrected : surface;
  }

  bool operator==(const EntityAnnotation &) const = default;
};

// ---------------------------------------------------------------------------
// Document

struct DocumentMetadata {
  std::string doc_id;
  std::string title;
  int publication_year = 0;
  std::optional<std::string> main_location;
  std::string language = "en";

  bool operator==(const DocumentMetadata &) const = default;
};

inline constexpr int kMinPublicationYear = 1850;
inline constexpr int kMaxPublicationYear = 1960;

struct PageWordBox {
  int page = 0;
  std::string text;
  int x = 0;
  int y = 0;
  int w = 0;
  int h = 0;
  std::optional<Span> char_span;

  bool operator==(const PageWordBox &) const = default;
};

enum class Pos { kNoun, kVerb, kAdj, kAdv, kPron, kFunc, kNum, kPunct, kOther };

std::string_view PosName(Pos pos);
std::optional<Pos> ParsePos(std::string_view name);

struct Token {
  Span span;
  std::string surface;
  std::string lower;
  std::optional<Pos> pos;

  bool operator==(const Token &) const = default;
};

struct Sentence {
  Span span;
  std::size_t token_begin = 0;  // [token_begin, token_end)
  std::size_t token_end = 0;

  bool operator==(const Sentence &) const = default;
};

struct AnnotatedDocument {
  DocumentMetadata metadata;
  std::string text;
  std::vector<ZoneAnnotation> zones;
  std::vector<EntityAnnotation> entities;
  std::vector<PageWordBox> word_boxes;
  std::vector<Token> tokens;
  std::vector<Sentence> sentences;

  bool operator==(const AnnotatedDocument &) const = default;
};

// Sort orders used wherever deterministic output matters: zones by
// (start, longer first, label), entities by (start, end, type).
void SortZones(std::vector<ZoneAnnotation> &zones);
void SortEntities(std::vector<EntityAnnotation> &entities);

}  // namespace epicorpus

#endif  // EPICORPUS_CORPUS_MODEL_H_
