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

#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "epicorpus/common/error.h"
#include "epicorpus/corpus/json.h"
#include "epicorpus/corpus/model.h"
#include "epicorpus/corpus/validate.h"

namespace epicorpus {
namespace {

// Relation computed from the sets of covered offsets, independent of the
// endpoint comparisons in RelateSpans.
SpanRelation SetRelation(const Span &a, const Span &b) {
  std::set<std::size_t> sa, sb;
  for (std::size_t i = a.start; i < a.end; ++i) sa.insert(i);
  for (std::size_t i = b.start; i < b.end; ++i) sb.insert(i);
  if (sa == sb) return SpanRelation::kEqual;
  bool a_in_b = std::includes(sb.begin(), sb.end(), sa.begin(), sa.end());
  bool b_in_a = std::includes(sa.begin(), sa.end(), sb.begin(), sb.end());
  if (b_in_a) return SpanRelation::kAContainsB;
  if (a_in_b) return SpanRelation::kBContainsA;
  std::vector<std::size_t> common;
  std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(),
                        std::back_inserter(common));
  return common.empty() ? SpanRelation::kDisjoint
                        : SpanRelation::kPartialOverlap;
}

AnnotatedDocument MakeDoc() {
  AnnotatedDocument doc;
  doc.metadata.doc_id = "hk1895";
  doc.metadata.title = "Report on the plague in Hong Kong";
  doc.metadata.publication_year = 1895;
  doc.text = std::string(600, ' ');
  const std::string phrase = "Mareh to June";
  doc.text.replace(10, phrase.size(), phrase);
  return doc;
}

TEST_CASE("span relation examples") {
  CHECK(RelateSpans({0, 10}, {2, 5}) == SpanRelation::kAContainsB);
  CHECK(RelateSpans({0, 10}, {8, 12}) == SpanRelation::kPartialOverlap);
  CHECK(RelateSpans({0, 5}, {5, 9}) == SpanRelation::kDisjoint);
  CHECK(RelateSpans({2, 5}, {0, 10}) == SpanRelation::kBContainsA);
  CHECK(RelateSpans({3, 7}, {3, 7}) == SpanRelation::kEqual);
}

TEST_CASE("span relation agrees with covered-offset sets") {
  std::mt19937 rng(1234);
  std::uniform_int_distribution<std::size_t> pos(0, 30);
  for (int trial = 0; trial < 5000; ++trial) {
    std::size_t a0 = pos(rng), a1 = pos(rng), b0 = pos(rng), b1 = pos(rng);
    if (a0 == a1 || b0 == b1) continue;
    Span a{std::min(a0, a1), std::max(a0, a1)};
    Span b{std::min(b0, b1), std::max(b0, b1)};
    REQUIRE(RelateSpans(a, b) == SetRelation(a, b));
    // Symmetry.
    SpanRelation ab = RelateSpans(a, b), ba = RelateSpans(b, a);
    if (ab == SpanRelation::kAContainsB) {
      CHECK(ba == SpanRelation::kBContainsA);
    } else if (ab == SpanRelation::kBContainsA) {
      CHECK(ba == SpanRelation::kAContainsB);
    } else {
      CHECK(ab == ba);
    }
  }
}

TEST_CASE("nested zones validate") {
  AnnotatedDocument doc = MakeDoc();
  doc.zones = {{"treatment", {100, 500}, {}}, {"cases", {150, 300}, {}}};
  CHECK(ValidateDocument(doc).empty());
}

TEST_CASE("partial zone overlap is a violation") {
  AnnotatedDocument doc = MakeDoc();
  doc.zones = {{"causes", {0, 100}, {}}, {"measures", {50, 150}, {}}};
  auto report = ValidateDocument(doc);
  REQUIRE(report.size() == 1);
  CHECK(report[0].code == "partial-zone-overlap");
}

TEST_CASE("entity surface must equal the text at its span") {
  AnnotatedDocument doc = MakeDoc();
  EntityAnnotation entity;
  entity.type = EntityType::kLocation;
  entity.span = {10, 15};
  entity.surface = "Bombay";
  doc.entities.push_back(entity);
  auto report = ValidateDocument(doc);
  REQUIRE(report.size() == 1);
  CHECK(report[0].code == "surface-mismatch");

  doc.entities[0].surface = "Mareh";
  CHECK(ValidateDocument(doc).empty());
}

TEST_CASE("entities needing values carry a value or a flag") {
  AnnotatedDocument doc = MakeDoc();
  EntityAnnotation entity;
  entity.type = EntityType::kDateRange;
  entity.span = {10, 23};
  entity.surface = "Mareh to June";
  doc.entities.push_back(entity);
  CHECK(ValidateDocument(doc).at(0).code == "missing-normalization");

  doc.entities[0].flag = NormFlag::kUnnormalizable;
  CHECK(ValidateDocument(doc).empty());

  doc.entities[0].flag = NormFlag::kNone;
  doc.entities[0].normalized = CalendarInterval{
      CalendarPoint::Month(1897, 6), CalendarPoint::Month(1897, 3)};
  CHECK(ValidateDocument(doc).at(0).code == "interval-start-after-end");

  doc.entities[0].normalized = CalendarInterval{
      CalendarPoint::Month(1897, 3), CalendarPoint::Month(1897, 6)};
  CHECK(ValidateDocument(doc).empty());
}

TEST_CASE("metadata invariants") {
  AnnotatedDocument doc = MakeDoc();
  doc.metadata.publication_year = 1700;
  doc.metadata.doc_id = "";
  auto report = ValidateDocument(doc);
  REQUIRE(report.size() == 2);
  CHECK(report[0].code == "empty-doc-id");
  CHECK(report[1].code == "publication-year-out-of-range");
}

TEST_CASE("calendar validity") {
  CHECK(ValidateNormalizedValue(CalendarPoint::Day(1897, 2, 29)).size() == 1);
  CHECK(ValidateNormalizedValue(CalendarPoint::Day(1896, 2, 29)).empty());
  CHECK(ValidateNormalizedValue(CalendarPoint::Month(1896, 13)).size() == 1);
  CHECK(ValidateNormalizedValue(Length{0}).size() == 1);
  CHECK(ValidateNormalizedValue(ClockTime{24, 0}).size() == 1);
}

TEST_CASE("validation is idempotent and order independent") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    AnnotatedDocument doc = MakeDoc();
    std::uniform_int_distribution<std::size_t> pos(0, 650);
    std::uniform_int_distribution<int> label(0, 19);
    for (int k = 0; k < 6; ++k) {
      std::size_t a = pos(rng), b = pos(rng);
      ZoneAnnotation zone;
      zone.label = ZoneSchema::Default().labels()[label(rng)];
      zone.span = {std::min(a, b), std::max(a, b)};
      doc.zones.push_back(zone);
    }
    for (int k = 0; k < 4; ++k) {
      std::size_t a = pos(rng), b = pos(rng);
      EntityAnnotation entity;
      entity.type = kAllEntityTypes[k % kAllEntityTypes.size()];
      entity.span = {std::min(a, b), std::max(a, b)};
      entity.surface = "x";
      doc.entities.push_back(entity);
    }
    auto first = ValidateDocument(doc);
    CHECK(first == ValidateDocument(doc));
    std::shuffle(doc.zones.begin(), doc.zones.end(), rng);
    std::shuffle(doc.entities.begin(), doc.entities.end(), rng);
    CHECK(first == ValidateDocument(doc));
  }
}

TEST_CASE("normalized value text form round-trips") {
  std::vector<NormalizedValue> values = {
      CalendarPoint::Day(1897, 2, 4),
      CalendarPoint::Month(1896, 9),
      CalendarPoint::Year(1898),
      CalendarInterval{CalendarPoint::Month(1896, 9), std::nullopt, false,
                       true},
      CalendarInterval{CalendarPoint::Year(1900), CalendarPoint::Year(1907)},
      ClockTime{16, 30},
      Duration{48, DurationUnit::kHour},
      Length{32186.88},
      Percentage{25},
  };
  for (const auto &value : values) {
    auto parsed = ParseNormalized(FormatNormalized(value));
    REQUIRE(parsed.has_value());
    CHECK(*parsed == value);
  }
  CHECK(FormatNormalized(CalendarPoint::Day(1897, 2, 4)) == "point:1897-02-04");
  CHECK(FormatNormalized(ClockTime{8, 0}) == "time:08:00");
  CHECK_FALSE(ParseNormalized("bogus").has_value());
}

TEST_CASE("day numbers") {
  CHECK(DaysFromCivil(1970, 1, 1) == 0);
  CHECK(DaysFromCivil(1970, 1, 2) == 1);
  CHECK(DaysFromCivil(1969, 12, 31) == -1);
  CHECK(LastDayOf(CalendarPoint::Month(1896, 2)) ==
        DaysFromCivil(1896, 2, 29));
  CHECK(FirstDayOf(CalendarPoint::Year(1897)) == DaysFromCivil(1897, 1, 1));
}

TEST_CASE("document JSON round-trips") {
  AnnotatedDocument doc = MakeDoc();
  doc.metadata.main_location = "Hong Kong";
  doc.zones = {{"table", {0, 50}, 12}};
  EntityAnnotation entity;
  entity.type = EntityType::kDateRange;
  entity.span = {10, 23};
  entity.surface = "Mareh to June";
  entity.corrected = "March to June";
  entity.normalized = CalendarInterval{CalendarPoint::Month(1897, 3),
                                       CalendarPoint::Month(1897, 6)};
  entity.provenance = Provenance::kManual;
  doc.entities.push_back(entity);
  doc.word_boxes.push_back({3, "plague", 100, 200, 80, 20, Span{10, 16}});
  Json j = doc;
  AnnotatedDocument back = Json::parse(j.dump()).get<AnnotatedDocument>();
  CHECK(back == doc);
}

TEST_CASE("metadata file parsing") {
  auto meta = ParseMetadata(
      R"({"doc_id":"sf1907","title":"Plague in San Francisco",)"
      R"("publication_year":1907,"main_location":"San Francisco",)"
      R"("language":"en"})");
  CHECK(meta.doc_id == "sf1907");
  CHECK(meta.publication_year == 1907);
  CHECK(meta.main_location == std::optional<std::string>("San Francisco"));
  CHECK_THROWS_AS(ParseMetadata("{\"title\": 1}"), ParseError);
}

}  // namespace
}  // namespace epicorpus
