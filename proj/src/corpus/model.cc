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

#include "epicorpus/corpus/model.h"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <tuple>

#include "epicorpus/common/text_util.h"

namespace epicorpus {

namespace {

constexpr std::array<std::string_view, 11> kEntityTypeNames = {
    "person",   "location", "geographic-feature", "plague-ontology-term",
    "date",     "date-range", "time",             "duration",
    "distance", "population", "percent",
};

constexpr std::array<std::string_view, 9> kPosNames = {
    "NOUN", "VERB", "ADJ", "ADV", "PRON", "FUNC", "NUM", "PUNCT", "OTHER",
};

constexpr std::array<std::string_view, 5> kDurationUnitNames = {
    "hour", "day", "week", "month", "year",
};

std::optional<int> ParseInt(std::string_view s) {
  int value = 0;
  auto result = std::from_chars(s.data(), s.data() + s.size(), value);
  if (result.ec != std::errc() || result.ptr != s.data() + s.size()) {
    return std::nullopt;
  }
  return value;
}

std::optional<double> ParseReal(std::string_view s) {
  double value = 0;
  auto result = std::from_chars(s.data(), s.data() + s.size(), value);
  if (result.ec != std::errc() || result.ptr != s.data() + s.size()) {
    return std::nullopt;
  }
  return value;
}

}  // namespace

std::string_view EntityTypeName(EntityType type) {
  return kEntityTypeNames[static_cast<std::size_t>(type)];
}

std::optional<EntityType> ParseEntityType(std::string_view name) {
  for (std::size_t i = 0; i < kEntityTypeNames.size(); ++i) {
    if (kEntityTypeNames[i] == name) return static_cast<EntityType>(i);
  }
  return std::nullopt;
}

bool RequiresNormalization(EntityType type) {
  switch (type) {
    case EntityType::kDate:
    case EntityType::kDateRange:
    case EntityType::kDuration:
    case EntityType::kDistance:
    case EntityType::kPercent:
      return true;
    default:
      return false;
  }
}

const ZoneSchema &ZoneSchema::Default() {
  static const ZoneSchema *schema = new ZoneSchema({
      "title-matter", "preface", "content-page", "introduction",
      "disease-history", "outbreak-history", "local-conditions", "causes",
      "measures", "clinical-appearances", "laboratory", "treatment", "cases",
      "statistics", "epizootics", "appendix", "conclusion", "footnote",
      "header-footer", "table",
  });
  return *schema;
}

ZoneSchema::ZoneSchema(std::vector<std::string> labels)
    : labels_(std::move(labels)) {}

bool ZoneSchema::Contains(std::string_view label) const {
  return IndexOf(label) >= 0;
}

int ZoneSchema::IndexOf(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return static_cast<int>(i);
  }
  return -1;
}

CalendarPoint CalendarPoint::Year(int year) {
  return CalendarPoint{year, std::nullopt, std::nullopt, Granularity::kYear};
}

CalendarPoint CalendarPoint::Month(int year, int month) {
  return CalendarPoint{year, month, std::nullopt, Granularity::kMonth};
}

CalendarPoint CalendarPoint::Day(int year, int month, int day) {
  return CalendarPoint{year, month, day, Granularity::kDay};
}

std::string_view DurationUnitName(DurationUnit unit) {
  return kDurationUnitNames[static_cast<std::size_t>(unit)];
}

std::optional<DurationUnit> ParseDurationUnit(std::string_view name) {
  for (std::size_t i = 0; i < kDurationUnitNames.size(); ++i) {
    if (kDurationUnitNames[i] == name) return static_cast<DurationUnit>(i);
  }
  return std::nullopt;
}

std::string FormatCalendarPoint(const CalendarPoint &point) {
  char buffer[32];
  if (point.month && point.day) {
    std::snprintf(buffer, sizeof(buffer), "%04d-%02d-%02d", point.year,
                  *point.month, *point.day);
  } else if (point.month) {
    std::snprintf(buffer, sizeof(buffer), "%04d-%02d", point.year,
                  *point.month);
  } else {
    std::snprintf(buffer, sizeof(buffer), "%04d", point.year);
  }
  return buffer;
}

std::optional<CalendarPoint> ParseCalendarPoint(std::string_view text) {
  std::vector<std::string> parts = Split(text, '-');
  if (parts.empty() || parts.size() > 3) return std::nullopt;
  auto year = ParseInt(parts[0]);
  if (!year) return std::nullopt;
  if (parts.size() == 1) return CalendarPoint::Year(*year);
  auto month = ParseInt(parts[1]);
  if (!month) return std::nullopt;
  if (parts.size() == 2) return CalendarPoint::Month(*year, *month);
  auto day = ParseInt(parts[2]);
  if (!day) return std::nullopt;
  return CalendarPoint::Day(*year, *month, *day);
}

std::string FormatNormalized(const NormalizedValue &value) {
  struct Visitor {
    std::string operator()(const CalendarPoint &p) const {
      return "point:" + FormatCalendarPoint(p);
    }
    std::string operator()(const CalendarInterval &i) const {
      std::string out = "interval:";
      if (i.start) out += FormatCalendarPoint(*i.start);
      out += "..";
      if (i.end) out += FormatCalendarPoint(*i.end);
      return out;
    }
    std::string operator()(const ClockTime &t) const {
      char buffer[16];
      std::snprintf(buffer, sizeof(buffer), "time:%02d:%02d", t.hour,
                    t.minute);
      return buffer;
    }
    std::string operator()(const Duration &d) const {
      return "duration:" + FormatDouble(d.magnitude) + ":" +
             std::string(DurationUnitName(d.unit));
    }
    std::string operator()(const Length &l) const {
      return "length:" + FormatDouble(l.meters);
    }
    std::string operator()(const Percentage &p) const {
      return "percent:" + FormatDouble(p.value);
    }
  };
  return std::visit(Visitor{}, value);
}

std::optional<NormalizedValue> ParseNormalized(std::string_view text) {
  std::size_t colon = text.find(':');
  if (colon == std::string_view::npos) return std::nullopt;
  std::string_view kind = text.substr(0, colon);
  std::string_view body = text.substr(colon + 1);
  if (kind == "point") {
    auto point = ParseCalendarPoint(body);
    if (!point) return std::nullopt;
    return NormalizedValue{*point};
  }
  if (kind == "interval") {
    std::size_t dots = body.find("..");
    if (dots == std::string_view::npos) return std::nullopt;
    CalendarInterval interval;
    std::string_view left = body.substr(0, dots);
    std::string_view right = body.substr(dots + 2);
    if (left.empty()) {
      interval.open_start = true;
    } else {
      interval.start = ParseCalendarPoint(left);
      if (!interval.start) return std::nullopt;
    }
    if (right.empty()) {
      interval.open_end = true;
    } else {
      interval.end = ParseCalendarPoint(right);
      if (!interval.end) return std::nullopt;
    }
    return NormalizedValue{interval};
  }
  if (kind == "time") {
    std::size_t sep = body.find(':');
    if (sep == std::string_view::npos) return std::nullopt;
    auto hour = ParseInt(body.substr(0, sep));
    auto minute = ParseInt(body.substr(sep + 1));
    if (!hour || !minute) return std::nullopt;
    return NormalizedValue{ClockTime{*hour, *minute}};
  }
  if (kind == "duration") {
    std::size_t sep = body.rfind(':');
    if (sep == std::string_view::npos) return std::nullopt;
    auto magnitude = ParseReal(body.substr(0, sep));
    auto unit = ParseDurationUnit(body.substr(sep + 1));
    if (!magnitude || !unit) return std::nullopt;
    return NormalizedValue{Duration{*magnitude, *unit}};
  }
  if (kind == "length") {
    auto meters = ParseReal(body);
    if (!meters) return std::nullopt;
    return NormalizedValue{Length{*meters}};
  }
  if (kind == "percent") {
    auto value = ParseReal(body);
    if (!value) return std::nullopt;
    return NormalizedValue{Percentage{*value}};
  }
  return std::nullopt;
}

bool IsLeapYear(int year) {
  return (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
}

int DaysInMonth(int year, int month) {
  static constexpr int kDays[] = {31, 28, 31, 30, 31, 30,
                                  31, 31, 30, 31, 30, 31};
  if (month < 1 || month > 12) return 0;
  if (month == 2 && IsLeapYear(year)) return 29;
  return kDays[month - 1];
}

// Howard Hinnant's days_from_civil.
std::int64_t DaysFromCivil(int year, int month, int day) {
  std::int64_t y = year - (month <= 2 ? 1 : 0);
  const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
  const std::int64_t yoe = y - era * 400;
  const std::int64_t mp = month > 2 ? month - 3 : month + 9;
  const std::int64_t doy = (153 * mp + 2) / 5 + day - 1;
  const std::int64_t doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + doe - 719468;
}

std::int64_t FirstDayOf(const CalendarPoint &point) {
  return DaysFromCivil(point.year, point.month.value_or(1),
                       point.day.value_or(1));
}

std::int64_t LastDayOf(const CalendarPoint &point) {
  int month = point.month.value_or(12);
  int day = point.day.value_or(DaysInMonth(point.year, month));
  return DaysFromCivil(point.year, month, day);
}

std::string_view PosName(Pos pos) {
  return kPosNames[static_cast<std::size_t>(pos)];
}

std::optional<Pos> ParsePos(std::string_view name) {
  for (std::size_t i = 0; i < kPosNames.size(); ++i) {
    if (kPosNames[i] == name) return static_cast<Pos>(i);
  }
  return std::nullopt;
}

void SortZones(std::vector<ZoneAnnotation> &zones) {
  std::stable_sort(zones.begin(), zones.end(),
                   [](const ZoneAnnotation &a, const ZoneAnnotation &b) {
                     return std::make_tuple(a.span.start, b.span.end, a.label) <
                            std::make_tuple(b.span.start, a.span.end, b.label);
                   });
}

void SortEntities(std::vector<EntityAnnotation> &entities) {
  std::stable_sort(entities.begin(), entities.end(),
                   [](const EntityAnnotation &a, const EntityAnnotation &b) {
                     return std::make_tuple(a.span.start, a.span.end, a.type) <
                            std::make_tuple(b.span.start, b.span.end, b.type);
                   });
}

}  // namespace epicorpus
