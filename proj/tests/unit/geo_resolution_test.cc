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

#include <cmath>
#include <random>

#include "doctest.h"
#include "epicorpus/common/error.h"
#include "epicorpus/geo/gazetteer.h"

namespace epicorpus {
namespace {

constexpr const char *kFixture =
    "# fixture\n"
    "1\tBombay\tMumbai\t19.07\t72.88\tP\t12000000\n"
    "2\tBombay\t\t44.94\t-74.57\tP\t300\n"
    "3\tAlpha\t\t10\t10\tP\t0\n"
    "4\tAlpha\t\t20\t20\tS\t0\n"
    "5\tPoona\tPune\t18.52\t73.86\tP\t1000\n"
    "6\tPoona\t\t-30\t-60\tP\t1000\n";

TEST_CASE("gazetteer loading") {
  Gazetteer g = Gazetteer::Parse(kFixture, "fixture");
  CHECK(g.size() == 6);
  auto hits = g.Candidates("mumbai");
  REQUIRE(hits.size() == 1);
  CHECK(hits[0]->gaz_id == 1);
  CHECK(g.Candidates("  BOMBAY ").size() == 2);

  Gazetteer empty = Gazetteer::Parse("", "empty");
  CHECK(empty.size() == 0);
  CHECK(empty.Candidates("bombay").empty());

  try {
    Gazetteer::Parse("\n7\tNowhere\t\t95\t0\tP\t1\n", "bad");
    FAIL("latitude 95 accepted");
  } catch (const ParseError &e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(Gazetteer::Parse("1\tA\t\t0\t0\tP\n", "short"), ParseError);
  CHECK_THROWS_AS(Gazetteer::Parse("1\tA\t\t0\t0\tP\t-1\n", "pop"), ParseError);
  CHECK_THROWS_AS(
      Gazetteer::Parse("1\tA\t\t0\t0\tP\t1\n1\tB\t\t0\t0\tP\t1\n", "dup"),
      ParseError);
}

TEST_CASE("resolution examples") {
  Gazetteer g = Gazetteer::Parse(kFixture, "fixture");
  auto r = ResolveLocation("Bombay", {}, g);
  REQUIRE(r);
  CHECK(r->chosen.gaz_id == 1);
  CHECK(r->alternatives.size() == 2);
  CHECK(r->score == doctest::Approx(std::log10(12000001.0) + 2.0));

  CHECK_FALSE(ResolveLocation("Zzyzx", {}, g));

  r = ResolveLocation("Alpha", {}, g);
  REQUIRE(r);
  CHECK(r->chosen.feature_class == 'P');
}

TEST_CASE("context breaks ties and the id breaks the rest") {
  Gazetteer g = Gazetteer::Parse(kFixture, "fixture");
  auto r = ResolveLocation("Poona", {}, g);
  REQUIRE(r);
  CHECK(r->chosen.gaz_id == 5);  // equal scores and populations
  r = ResolveLocation("Poona", {GeoPoint{-27, -58, 99}}, g);
  REQUIRE(r);
  CHECK(r->chosen.gaz_id == 6);
}

TEST_CASE("document resolution runs in text order with context") {
  AnnotatedDocument doc;
  doc.text = "Pune, then Poona.";
  EntityAnnotation later, first;
  later.span = {11, 16};
  later.surface = "Poona";
  first.span = {0, 4};
  first.surface = "Pune";
  doc.entities = {later, first};
  Gazetteer g = Gazetteer::Parse(kFixture, "fixture");
  ResolveDocumentLocations(doc, g);
  REQUIRE(doc.entities[1].geo);
  CHECK(doc.entities[1].geo->gaz_id == 5);
  REQUIRE(doc.entities[0].geo);
  CHECK(doc.entities[0].geo->gaz_id == 5);
}

TEST_CASE("resolution is deterministic, chooses a candidate, and ignores "
          "uniform bonuses") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> pop(0, 100000);
  std::uniform_int_distribution<int> cls(0, 3);
  std::uniform_real_distribution<double> coord(-50, 50);
  const char classes[] = {'P', 'A', 'S', 'H'};
  for (int trial = 0; trial < 300; ++trial) {
    std::string tsv;
    int n = 1 + trial % 6;
    for (int i = 0; i < n; ++i) {
      tsv += std::to_string(100 - i) + "\tPlace\t\t" +
             std::to_string(coord(rng)) + "\t" + std::to_string(coord(rng)) +
             "\t" + classes[cls(rng)] + "\t" + std::to_string(pop(rng)) + "\n";
    }
    Gazetteer g = Gazetteer::Parse(tsv, "random");
    std::vector<GeoPoint> context = {{coord(rng), coord(rng), 0}};
    auto a = ResolveLocation("place", context, g);
    auto b = ResolveLocation("place", context, g);
    REQUIRE(a);
    CHECK(a->chosen == b->chosen);
    bool member = false;
    for (const GazetteerEntry *e : g.Candidates("place")) {
      member = member || *e == a->chosen;
    }
    CHECK(member);
    // A context point covering every candidate adds the same bonus to all.
    GeoScoring wide;
    wide.context_radius = 1000;
    auto c = ResolveLocation("place", context, g, wide);
    GeoScoring none;
    none.context_bonus = 0;
    auto d = ResolveLocation("place", context, g, none);
    CHECK(c->chosen == d->chosen);
  }
}

TEST_CASE("bundled gazetteer") {
  const Gazetteer &g = Gazetteer::Default();
  CHECK(g.size() >= 50);
  auto r = ResolveLocation("Bombay", {}, g);
  REQUIRE(r);
  CHECK(r->chosen.latitude == doctest::Approx(19.07283));
  CHECK(ResolveLocation("Hongkong", {}, g)->chosen.name == "Hong Kong");
}

}  // namespace
}  // namespace epicorpus
