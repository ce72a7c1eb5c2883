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

#include <random>
#include <set>

#include "doctest.h"
#include "epicorpus/common/error.h"
#include "epicorpus/corpus/validate.h"
#include "epicorpus/ner/annotate.h"
#include "epicorpus/ner/lexicon.h"
#include "epicorpus/ner/measurements.h"
#include "epicorpus/ner/temporal.h"
#include "epicorpus/pipeline/sentences.h"
#include "epicorpus/pipeline/tokenizer.h"

namespace epicorpus {
namespace {

AnnotatedDocument MakeDoc(std::string text, int year = 1897) {
  AnnotatedDocument doc;
  doc.metadata.doc_id = "d";
  doc.metadata.publication_year = year;
  doc.text = std::move(text);
  doc.tokens = Tokenize(doc.text);
  doc.sentences = SplitSentences(doc.tokens);
  return doc;
}

std::vector<EntityAnnotation> Temporal(const std::string &text,
                                       int year = 1897) {
  return RecognizeTemporal(text, Tokenize(text), year);
}

std::vector<EntityAnnotation> Measures(const std::string &text) {
  return RecognizeMeasurements(text, Tokenize(text));
}

// The single mention recognised in `text`; fails the test otherwise.
EntityAnnotation Only(const std::vector<EntityAnnotation> &found) {
  REQUIRE(found.size() == 1);
  return found[0];
}

CalendarInterval Interval(std::optional<CalendarPoint> start,
                          std::optional<CalendarPoint> end) {
  CalendarInterval iv;
  iv.start = start;
  iv.end = end;
  iv.open_start = !start;
  iv.open_end = !end;
  return iv;
}

// --- lexicon loading ------------------------------------------------------

TEST_CASE("lexicon file parsing") {
  auto lex = EntityLexicon::Parse(
      {{"a.tsv", "bubo\tbubo\tplague-ontology-term\n"}});
  CHECK(lex.size() == 1);
  CHECK(lex.FindEntry("bubo")->type == EntityType::kPlagueOntologyTerm);

  CHECK(EntityLexicon::Parse({{"empty.tsv", ""}}).empty());

  try {
    EntityLexicon::Parse({{"v.tsv", "# c\nIatrines\tlatrines\n"}});
    FAIL("dangling variant accepted");
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::kMissingReference);
    CHECK(std::string(e.what()).find("v.tsv:2") != std::string::npos);
  }

  try {
    EntityLexicon::Parse({{"a.tsv", "Venice\tVenice\tlocation\n"},
                          {"b.tsv", "venice\tVenice\tperson\n"}});
    FAIL("conflicting types accepted");
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::kConflict);
    std::string message = e.what();
    CHECK(message.find("location") != std::string::npos);
    CHECK(message.find("person") != std::string::npos);
  }

  try {
    EntityLexicon::Parse({{"c.tsv", "\n\nplague only\n"}});
    FAIL("bad row accepted");
  } catch (const ParseError &e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(EntityLexicon::Parse({{"d.tsv", "x\tx\tweather\n"}}),
                  ParseError);
}

TEST_CASE("variants may refer to entries in later files") {
  auto lex = EntityLexicon::Parse(
      {{"v.tsv", "Iatrines\tlatrines\n"},
       {"e.tsv", "latrines\tlatrines\tgeographic-feature\n"}});
  CHECK(lex.variant_count() == 1);
}

TEST_CASE("bundled lexicon loads") {
  const EntityLexicon &lex = EntityLexicon::Default();
  CHECK(lex.size() > 100);
  CHECK(lex.FindEntry("m. haffkine") != nullptr);
  CHECK(lex.FindVariant("iatrines") != nullptr);
}

// --- lexicon matching -----------------------------------------------------

TEST_CASE("lexicon matching examples") {
  auto lex = EntityLexicon::Parse(
      {{"t.tsv",
        "bubo\tbubo\tplague-ontology-term\n"
        "latrines\tlatrines\tgeographic-feature\n"
        "Iatrines\tlatrines\n"
        "M. Haffkine\tM. Haffkine\tperson\n"
        "bacillus\tbacillus\tplague-ontology-term\n"
        "city\tcity\tgeographic-feature\n"}});

  std::string text = "buboes were found";
  auto found = MatchLexiconEntities(text, Tokenize(text), lex);
  REQUIRE(found.size() == 1);
  CHECK(found[0].type == EntityType::kPlagueOntologyTerm);
  CHECK(found[0].surface == "buboes");
  CHECK_FALSE(found[0].corrected);

  text = "the Iatrines were foul";
  found = MatchLexiconEntities(text, Tokenize(text), lex);
  REQUIRE(found.size() == 1);
  CHECK(found[0].type == EntityType::kGeographicFeature);
  CHECK(found[0].surface == "Iatrines");
  CHECK(found[0].corrected == std::optional<std::string>("latrines"));

  text = "inoculated by M. Haffkine himself";
  found = MatchLexiconEntities(text, Tokenize(text), lex);
  REQUIRE(found.size() == 1);
  CHECK(found[0].type == EntityType::kPerson);
  CHECK(found[0].surface == "M. Haffkine");

  text = "bacilli in two cities";
  found = MatchLexiconEntities(text, Tokenize(text), lex);
  REQUIRE(found.size() == 2);
  CHECK(found[0].surface == "bacilli");
  CHECK(found[1].surface == "cities");
}

TEST_CASE("longest lexicon match wins") {
  auto lex = EntityLexicon::Parse(
      {{"t.tsv",
        "Bombay\tBombay\tlocation\nCity of Bombay\tCity of Bombay\tlocation\n"}});
  std::string text = "in the City of Bombay and Bombay";
  auto found = MatchLexiconEntities(text, Tokenize(text), lex);
  REQUIRE(found.size() == 2);
  CHECK(found[0].surface == "City of Bombay");
  CHECK(found[1].surface == "Bombay");
}

// Oracle: generate the plural forms of the entry and scan tokens directly.
std::set<std::string> PluralsOf(const std::string &w) {
  std::set<std::string> forms = {w, w + "es"};
  if (w.back() != 's') forms.insert(w + "s");
  if (w.size() > 1 && w.back() == 'y') {
    forms.insert(w.substr(0, w.size() - 1) + "ies");
  }
  if (w.size() > 2 && w.substr(w.size() - 2) == "us") {
    forms.insert(w.substr(0, w.size() - 2) + "i");
  }
  return forms;
}

TEST_CASE("one-entry lexicon equals a naive scan") {
  const std::vector<std::string> entries = {"plague", "bubo", "city", "rat",
                                            "fever", "focus"};
  const std::vector<std::string> noise = {"the", "house", "Rats", "cit",
                                          "plagu", "ratios", "bubos", ",",
                                          "foci", "fevers.", "CITIES"};
  std::mt19937 rng(17);
  for (const std::string &entry : entries) {
    auto lex = EntityLexicon::Parse(
        {{"t.tsv", entry + "\t" + entry + "\tplague-ontology-term\n"}});
    std::set<std::string> plurals = PluralsOf(entry);
    std::vector<std::string> pool(plurals.begin(), plurals.end());
    pool.insert(pool.end(), noise.begin(), noise.end());
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (int trial = 0; trial < 200; ++trial) {
      std::string text;
      for (int k = 0; k < 15; ++k) text += pool[pick(rng)] + " ";
      auto tokens = Tokenize(text);
      std::vector<Span> expected;
      for (const Token &t : tokens) {
        if (plurals.count(t.lower)) expected.push_back(t.span);
      }
      std::vector<Span> actual;
      for (const auto &e : MatchLexiconEntities(text, tokens, lex)) {
        actual.push_back(e.span);
      }
      REQUIRE(actual == expected);
    }
  }
}

// --- temporal -------------------------------------------------------------

TEST_CASE("dates") {
  auto e = Only(Temporal("on 4th February 1897 the"));
  CHECK(e.type == EntityType::kDate);
  CHECK(e.surface == "4th February 1897");
  CHECK(e.normalized == NormalizedValue(CalendarPoint::Day(1897, 2, 4)));

  e = Only(Temporal("in March 1897"));
  CHECK(e.normalized == NormalizedValue(CalendarPoint::Month(1897, 3)));
  e = Only(Temporal("during 1898"));
  CHECK(e.normalized == NormalizedValue(CalendarPoint::Year(1898)));
  e = Only(Temporal("February 4, 1897"));
  CHECK(e.normalized == NormalizedValue(CalendarPoint::Day(1897, 2, 4)));
  e = Only(Temporal("on the 4th of February", 1899));
  CHECK(e.normalized == NormalizedValue(CalendarPoint::Day(1899, 2, 4)));

  CHECK(Temporal("page 1700 and 2001").empty());
  CHECK(Temporal("they march in may").empty());
  // An impossible day falls back to the month.
  e = Only(Temporal("30th February 1897"));
  CHECK(e.surface == "February 1897");
}

TEST_CASE("date ranges") {
  auto e = Only(Temporal("from 1900-1907"));
  CHECK(e.type == EntityType::kDateRange);
  CHECK(e.normalized == NormalizedValue(Interval(CalendarPoint::Year(1900),
                                                 CalendarPoint::Year(1907))));

  e = Only(Temporal("the pandemic 1894-6"));
  CHECK(e.normalized == NormalizedValue(Interval(CalendarPoint::Year(1894),
                                                 CalendarPoint::Year(1896))));

  e = Only(Temporal("July 1898 to March 1899"));
  CHECK(e.normalized ==
        NormalizedValue(Interval(CalendarPoint::Month(1898, 7),
                                 CalendarPoint::Month(1899, 3))));

  e = Only(Temporal("since September 1896"));
  CHECK(e.surface == "since September 1896");
  CHECK(e.normalized ==
        NormalizedValue(Interval(CalendarPoint::Month(1896, 9), std::nullopt)));

  e = Only(Temporal("until 1899"));
  CHECK(e.normalized ==
        NormalizedValue(Interval(std::nullopt, CalendarPoint::Year(1899))));

  e = Only(Temporal("March to June", 1897));
  CHECK(e.normalized ==
        NormalizedValue(Interval(CalendarPoint::Month(1897, 3),
                                 CalendarPoint::Month(1897, 6))));

  // Missing years come from the other endpoint.
  e = Only(Temporal("December to March 1897"));
  CHECK(e.normalized ==
        NormalizedValue(Interval(CalendarPoint::Month(1896, 12),
                                 CalendarPoint::Month(1897, 3))));
  e = Only(Temporal("November 1896 to February"));
  CHECK(e.normalized ==
        NormalizedValue(Interval(CalendarPoint::Month(1896, 11),
                                 CalendarPoint::Month(1897, 2))));
  e = Only(Temporal("4th to 10th May 1897"));
  CHECK(e.normalized ==
        NormalizedValue(Interval(CalendarPoint::Day(1897, 5, 4),
                                 CalendarPoint::Day(1897, 5, 10))));
  e = Only(Temporal("between 1896 and 1898"));
  CHECK(e.surface == "between 1896 and 1898");

  CHECK(Temporal("1907-1900").empty());
}

TEST_CASE("clock times") {
  auto time = [](const std::string &s) {
    auto e = Only(Temporal(s));
    CHECK(e.type == EntityType::kTime);
    return std::get<ClockTime>(*e.normalized);
  };
  CHECK(time("at midnight") == ClockTime{0, 0});
  CHECK(time("at noon") == ClockTime{12, 0});
  CHECK(time("at 8 a.m. sharp") == ClockTime{8, 0});
  CHECK(time("4:30 p.m.") == ClockTime{16, 30});
  CHECK(time("12 p.m.") == ClockTime{12, 0});
  CHECK(time("12 a.m.") == ClockTime{0, 0});
  CHECK(time("4.30 p.m.") == ClockTime{16, 30});
  CHECK(time("six o'clock") == ClockTime{6, 0});
  CHECK(time("at 17:45") == ClockTime{17, 45});
  CHECK(Temporal("3.5 grains").empty());
}

TEST_CASE("durations") {
  auto duration = [](const std::string &s) {
    auto e = Only(Temporal(s));
    CHECK(e.type == EntityType::kDuration);
    return e;
  };
  CHECK(duration("for ten days").normalized ==
        NormalizedValue(Duration{10, DurationUnit::kDay}));
  CHECK(duration("48 hours").normalized ==
        NormalizedValue(Duration{48, DurationUnit::kHour}));
  CHECK(duration("a week").normalized ==
        NormalizedValue(Duration{1, DurationUnit::kWeek}));
  CHECK(duration("half an hour").normalized ==
        NormalizedValue(Duration{0.5, DurationUnit::kHour}));
  CHECK(duration("a fortnight").normalized ==
        NormalizedValue(Duration{2, DurationUnit::kWeek}));
  CHECK(duration("twenty one years").normalized ==
        NormalizedValue(Duration{21, DurationUnit::kYear}));
  for (const char *vague :
       {"months", "winter", "a long time", "several weeks", "a few days"}) {
    auto e = duration(vague);
    CHECK(e.surface == vague);
    CHECK_FALSE(e.normalized);
    CHECK(e.flag == NormFlag::kUnnormalizable);
  }
}

TEST_CASE("relative dates are flagged") {
  auto e = Only(Temporal("on the next day"));
  CHECK(e.surface == "next day");
  CHECK(e.type == EntityType::kDate);
  CHECK(e.flag == NormFlag::kRelative);
  CHECK_FALSE(e.normalized);

  e = Only(Temporal("at the beginning of June"));
  CHECK(e.surface == "the beginning of June");
  CHECK(e.flag == NormFlag::kRelative);
}

TEST_CASE("corrected mention is normalised") {
  AnnotatedDocument doc = MakeDoc("It lasted from Mareh to June.", 1897);
  EntityAnnotation e;
  e.type = EntityType::kDateRange;
  e.span = {15, 28};
  e.surface = "Mareh to June";
  e.corrected = "March to June";
  e.provenance = Provenance::kManual;
  doc.entities.push_back(e);
  NormalizeEntities(doc);
  CHECK(doc.entities[0].normalized ==
        NormalizedValue(Interval(CalendarPoint::Month(1897, 3),
                                 CalendarPoint::Month(1897, 6))));

  // Without the correction the mention is unreadable.
  doc.entities[0].corrected.reset();
  doc.entities[0].normalized.reset();
  NormalizeEntities(doc);
  CHECK(doc.entities[0].flag == NormFlag::kUnnormalizable);
  CHECK(ValidateDocument(doc).empty());
}

// --- measurements ---------------------------------------------------------

TEST_CASE("distances and percentages") {
  auto length = [](const std::string &s) {
    auto e = Only(Measures(s));
    CHECK(e.type == EntityType::kDistance);
    return std::get<Length>(*e.normalized).meters;
  };
  CHECK(length("20 miles") == doctest::Approx(32186.88).epsilon(1e-12));
  CHECK(length("six miles") == doctest::Approx(9656.064).epsilon(1e-12));
  CHECK(length("100 yards") == doctest::Approx(91.44).epsilon(1e-12));
  CHECK(length("30 feet") == doctest::Approx(9.144).epsilon(1e-12));
  CHECK(length("a mile") == doctest::Approx(1609.344).epsilon(1e-12));
  CHECK(length("2.5 km") == doctest::Approx(2500).epsilon(1e-12));

  auto percent = [](const std::string &s) {
    auto e = Only(Measures(s));
    CHECK(e.type == EntityType::kPercent);
    return e;
  };
  CHECK(percent("8%").normalized == NormalizedValue(Percentage{8}));
  CHECK(percent("25 per cent").normalized == NormalizedValue(Percentage{25}));
  CHECK(percent("ten per cent").normalized == NormalizedValue(Percentage{10}));
  CHECK(percent("was 25 per cent.").surface == "25 per cent");
  CHECK(percent("12.5 percent").normalized ==
        NormalizedValue(Percentage{12.5}));
  CHECK(Measures("a per cent").empty());
  CHECK(Measures("miles away").empty());
}

// --- every mention from the entity table reads as its type -----------------

TEST_CASE("entity table mentions are recognised") {
  struct Row {
    EntityType type;
    std::vector<const char *> mentions;
  };
  const std::vector<Row> rule_rows = {
      {EntityType::kDate,
       {"1898", "March 1897", "4th February 1897", "the beginning of June",
        "next day"}},
      {EntityType::kDateRange,
       {"1900-1907", "July 1898 to March 1899", "since September 1896"}},
      {EntityType::kTime, {"midnight", "noon", "8 a.m.", "4:30 p.m."}},
      {EntityType::kDuration,
       {"ten days", "months", "a week", "48 hours", "winter", "a long time"}},
      {EntityType::kDistance,
       {"20 miles", "100 yards", "six miles", "30 feet"}},
      {EntityType::kPercent, {"8%", "25 per cent", "ten per cent"}},
  };
  for (const Row &row : rule_rows) {
    for (const char *mention : row.mentions) {
      CAPTURE(mention);
      auto e = RecognizeMention(mention, 1897);
      REQUIRE(e.has_value());
      CHECK(e->type == row.type);
      CHECK((e->normalized.has_value() || e->flag != NormFlag::kNone));
    }
  }

  const std::vector<Row> lexicon_rows = {
      {EntityType::kPerson,
       {"Professor Zabolotny", "Professor Kitasato", "Dr. Yersin",
        "M. Haffkine"}},
      {EntityType::kLocation,
       {"India", "Bombay", "City of Bombay", "San Francisco", "Venice"}},
      {EntityType::kGeographicFeature,
       {"house", "hospital", "port", "store", "street"}},
      {EntityType::kPlagueOntologyTerm,
       {"plague", "bubo", "bacilli", "pneumonia", "hemorrhages", "vomiting"}},
      {EntityType::kPopulation,
       {"Chinese", "Europeans", "Indian", "Russian", "Asiatics", "coolies",
        "villagers"}},
  };
  for (const Row &row : lexicon_rows) {
    for (const char *mention : row.mentions) {
      CAPTURE(mention);
      std::string text = mention;
      auto found = MatchLexiconEntities(text, Tokenize(text),
                                        EntityLexicon::Default());
      REQUIRE(found.size() == 1);
      CHECK(found[0].type == row.type);
      CHECK(found[0].surface == text);
    }
  }
}

// --- merging --------------------------------------------------------------

TEST_CASE("annotate merges with manual priority") {
  AnnotatedDocument doc =
      MakeDoc("Plague reached the City of Bombay in September 1896.");
  EntityAnnotation manual;
  manual.type = EntityType::kPerson;
  manual.span = {19, 23};
  manual.surface = "City";
  manual.provenance = Provenance::kManual;
  doc.entities.push_back(manual);
  AnnotateEntities(doc);
  REQUIRE(doc.entities.size() == 3);
  CHECK(doc.entities[0].surface == "Plague");
  CHECK(doc.entities[1] == manual);
  CHECK(doc.entities[2].surface == "September 1896");
  CHECK(ValidateDocument(doc).empty());

  AnnotatedDocument plain =
      MakeDoc("Plague reached the City of Bombay in September 1896.");
  AnnotateEntities(plain);
  REQUIRE(plain.entities.size() == 3);
  CHECK(plain.entities[1].surface == "City of Bombay");
  CHECK(plain.entities[1].type == EntityType::kLocation);
}

TEST_CASE("annotate leaves a document without matches unchanged") {
  AnnotatedDocument doc = MakeDoc("Nothing of note here.");
  AnnotatedDocument before = doc;
  AnnotateEntities(doc);
  CHECK(doc == before);
}

TEST_CASE("annotate is idempotent") {
  AnnotatedDocument doc = MakeDoc(
      "Dr. Lowson saw 20 buboes at the hospital on 4th February 1897. "
      "Mortality was 25 per cent. for ten days.");
  AnnotateEntities(doc);
  AnnotatedDocument once = doc;
  AnnotateEntities(doc);
  CHECK(doc == once);
}

TEST_CASE("annotated entities never overlap and intervals are ordered") {
  const std::vector<std::string> pieces = {
      "the plague",  "City of Bombay", "Bombay",    "in",     "March 1897",
      "to",          "June",           "since",     "1896",   "ten",
      "days",        "20 miles",       "per cent",  "25",     ".",
      "M. Haffkine", "next day",       "a week",    "8 a.m.", "Iatrines",
      "December",    "1894-6",         "winter",    "-",      "4th",
      "buboes",      "Chinese",        "the beginning of", "1899", "a"};
  std::mt19937 rng(23);
  std::uniform_int_distribution<std::size_t> pick(0, pieces.size() - 1);
  for (int trial = 0; trial < 300; ++trial) {
    std::string text;
    for (int k = 0; k < 30; ++k) text += pieces[pick(rng)] + " ";
    AnnotatedDocument doc = MakeDoc(text, 1850 + trial % 100);
    AnnotateEntities(doc);
    for (std::size_t i = 1; i < doc.entities.size(); ++i) {
      REQUIRE(doc.entities[i - 1].span.end <= doc.entities[i].span.start);
    }
    for (const EntityAnnotation &e : doc.entities) {
      if (!e.normalized) continue;
      if (const auto *iv = std::get_if<CalendarInterval>(&*e.normalized)) {
        if (iv->start && iv->end) {
          REQUIRE(FirstDayOf(*iv->start) <= LastDayOf(*iv->end));
        } else {
          REQUIRE((iv->open_start || iv->open_end));
        }
      }
    }
    CAPTURE(text);
    REQUIRE(ValidateDocument(doc).empty());
  }
}

}  // namespace
}  // namespace epicorpus
