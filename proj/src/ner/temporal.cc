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

#include "epicorpus/ner/temporal.h"

#include <array>
#include <optional>

#include "epicorpus/common/text_util.h"
#include "epicorpus/ner/mention.h"

namespace epicorpus {

namespace {

using Tokens = std::vector<Token>;

constexpr std::array<std::string_view, 12> kMonthNames = {
    "january", "february", "march",     "april",   "may",      "june",
    "july",    "august",   "september", "october", "november", "december"};

constexpr std::array<std::string_view, 12> kMonthAbbrevs = {
    "jan", "feb", "mar", "apr", "may", "jun",
    "jul", "aug", "sep", "oct", "nov", "dec"};

struct PartialDate {
  std::optional<int> year;
  std::optional<int> month;
  std::optional<int> day;
};

struct DateMatch {
  PartialDate date;
  std::size_t end = 0;
};

struct Candidate {
  std::size_t end = 0;
  EntityType type = EntityType::kDate;
  std::optional<NormalizedValue> value;
  NormFlag flag = NormFlag::kNone;
};

std::optional<int> ParseSmallInt(std::string_view s, std::size_t max_digits) {
  if (s.empty() || s.size() > max_digits || !IsAllDigits(s)) {
    return std::nullopt;
  }
  int v = 0;
  for (char c : s) v = v * 10 + (c - '0');
  return v;
}

// Month names must be capitalised so that "march" and "may" stay verbs.
std::optional<int> MonthAt(const Tokens &tokens, std::size_t i) {
  if (i >= tokens.size()) return std::nullopt;
  const Token &t = tokens[i];
  if (t.surface.empty() || t.surface[0] < 'A' || t.surface[0] > 'Z') {
    return std::nullopt;
  }
  std::string_view w = t.lower;
  if (EndsWith(w, ".")) w.remove_suffix(1);
  for (std::size_t m = 0; m < 12; ++m) {
    if (w == kMonthNames[m] || w == kMonthAbbrevs[m]) {
      return static_cast<int>(m + 1);
    }
  }
  if (w == "sept") return 9;
  return std::nullopt;
}

// "4", "4th", "22nd".
std::optional<int> DayAt(const Tokens &tokens, std::size_t i) {
  if (i >= tokens.size()) return std::nullopt;
  std::string_view w = tokens[i].lower;
  for (std::string_view suffix : {"st", "nd", "rd", "th"}) {
    if (EndsWith(w, suffix)) {
      w.remove_suffix(2);
      break;
    }
  }
  auto day = ParseSmallInt(w, 2);
  if (!day || *day < 1 || *day > 31) return std::nullopt;
  return day;
}

std::optional<int> YearAt(const Tokens &tokens, std::size_t i, int lo,
                          int hi) {
  if (i >= tokens.size()) return std::nullopt;
  auto year = ParseSmallInt(tokens[i].lower, 4);
  if (!year || tokens[i].lower.size() != 4 || *year < lo || *year > hi) {
    return std::nullopt;
  }
  return year;
}

// Years next to a month name are unambiguous, so the window is wider.
std::optional<int> AnchoredYearAt(const Tokens &tokens, std::size_t i) {
  return YearAt(tokens, i, 1000, 2100);
}

std::size_t SkipComma(const Tokens &tokens, std::size_t i) {
  return TokenIs(tokens, i, ",") ? i + 1 : i;
}

std::optional<DateMatch> ParseDate(const Tokens &tokens, std::size_t i,
                                   bool allow_bare_month,
                                   bool allow_bare_day) {
  std::optional<DateMatch> best;
  auto consider = [&](PartialDate date, std::size_t end) {
    if (!best || end > best->end) best = DateMatch{date, end};
  };

  if (auto day = DayAt(tokens, i)) {
    std::size_t j = TokenIs(tokens, i + 1, "of") ? i + 2 : i + 1;
    if (auto month = MonthAt(tokens, j)) {
      consider({std::nullopt, month, day}, j + 1);
      std::size_t k = SkipComma(tokens, j + 1);
      if (auto year = AnchoredYearAt(tokens, k)) {
        consider({year, month, day}, k + 1);
      }
    }
    if (allow_bare_day) consider({std::nullopt, std::nullopt, day}, i + 1);
  }

  if (auto month = MonthAt(tokens, i)) {
    if (allow_bare_month) consider({std::nullopt, month, std::nullopt}, i + 1);
    std::size_t k = SkipComma(tokens, i + 1);
    if (auto year = AnchoredYearAt(tokens, k)) {
      consider({year, month, std::nullopt}, k + 1);
    }
    if (auto day = DayAt(tokens, i + 1)) {
      consider({std::nullopt, month, day}, i + 2);
      std::size_t k2 = SkipComma(tokens, i + 2);
      if (auto year = AnchoredYearAt(tokens, k2)) {
        consider({year, month, day}, k2 + 1);
      }
    }
  }

  if (auto year = YearAt(tokens, i, kBareYearMin, kBareYearMax)) {
    consider({year, std::nullopt, std::nullopt}, i + 1);
  }
  return best;
}

std::optional<CalendarPoint> ToPoint(const PartialDate &date) {
  if (!date.year) return std::nullopt;
  if (!date.month) {
    if (date.day) return std::nullopt;
    return CalendarPoint::Year(*date.year);
  }
  if (!date.day) return CalendarPoint::Month(*date.year, *date.month);
  if (*date.day > DaysInMonth(*date.year, *date.month)) return std::nullopt;
  return CalendarPoint::Day(*date.year, *date.month, *date.day);
}

bool StartsAfter(const PartialDate &a, const PartialDate &b) {
  auto pa = ToPoint(a), pb = ToPoint(b);
  return pa && pb && FirstDayOf(*pa) > FirstDayOf(*pb);
}

std::optional<CalendarInterval> ResolveRange(PartialDate left,
                                             PartialDate right,
                                             int pub_year) {
  if (!right.month && !right.year) return std::nullopt;
  if (!left.month && !left.year) {
    // Bare day on the left ("4th to 10th May"): borrow the month.
    if (!right.day) return std::nullopt;
    left.month = right.month;
  }
  if (left.year && !right.year) {
    right.year = left.year;
    if (StartsAfter(left, right)) ++*right.year;
  } else if (!left.year && right.year) {
    left.year = right.year;
    if (StartsAfter(left, right)) --*left.year;
  } else if (!left.year && !right.year) {
    left.year = right.year = pub_year;
    if (StartsAfter(left, right)) --*left.year;
  }
  auto start = ToPoint(left);
  auto end = ToPoint(right);
  if (!start || !end || FirstDayOf(*start) > LastDayOf(*end)) {
    return std::nullopt;
  }
  CalendarInterval interval;
  interval.start = start;
  interval.end = end;
  return interval;
}

bool IsRangeConnector(const Tokens &tokens, std::size_t i) {
  if (i >= tokens.size()) return false;
  const std::string &w = tokens[i].lower;
  return w == "to" || w == "till" || w == "until" || w == "-" ||
         w == "\xE2\x80\x93" || w == "\xE2\x80\x94";
}

// "1900-1907", "1894-6", "1894-96" as a single token.
std::optional<Candidate> CompactYearRange(const Tokens &tokens,
                                          std::size_t i) {
  const std::string &w = tokens[i].lower;
  if (w.size() < 6 || w[4] != '-') return std::nullopt;
  auto start = ParseSmallInt(std::string_view(w).substr(0, 4), 4);
  std::string_view tail = std::string_view(w).substr(5);
  if (!start || tail.size() > 4 || !IsAllDigits(tail)) return std::nullopt;
  if (*start < kBareYearMin || *start > kBareYearMax) return std::nullopt;
  std::string full = w.substr(0, 4 - tail.size()) + std::string(tail);
  int end = std::stoi(full);
  if (end <= *start) return std::nullopt;
  CalendarInterval interval;
  interval.start = CalendarPoint::Year(*start);
  interval.end = CalendarPoint::Year(end);
  return Candidate{i + 1, EntityType::kDateRange, interval, NormFlag::kNone};
}

std::optional<Candidate> RangeAt(const Tokens &tokens, std::size_t i,
                                 int pub_year) {
  std::optional<Candidate> best;
  auto consider = [&](std::size_t end, CalendarInterval interval) {
    if (!best || end > best->end) {
      best = Candidate{end, EntityType::kDateRange, interval, NormFlag::kNone};
    }
  };

  if (auto compact = CompactYearRange(tokens, i)) best = compact;

  // X to Y
  if (auto left = ParseDate(tokens, i, true, true)) {
    if (IsRangeConnector(tokens, left->end)) {
      if (auto right = ParseDate(tokens, left->end + 1, true, false)) {
        if (auto iv = ResolveRange(left->date, right->date, pub_year)) {
          consider(right->end, *iv);
        }
      }
    }
  }

  // between X and Y
  if (TokenIs(tokens, i, "between")) {
    if (auto left = ParseDate(tokens, i + 1, true, true)) {
      if (TokenIs(tokens, left->end, "and")) {
        if (auto right = ParseDate(tokens, left->end + 1, true, false)) {
          if (auto iv = ResolveRange(left->date, right->date, pub_year)) {
            consider(right->end, *iv);
          }
        }
      }
    }
  }

  // since X / until X
  bool since = TokenIs(tokens, i, "since");
  bool until = TokenIs(tokens, i, "until") || TokenIs(tokens, i, "till");
  if (since || until) {
    if (auto date = ParseDate(tokens, i + 1, true, false)) {
      PartialDate d = date->date;
      if (!d.year) d.year = pub_year;
      if (auto point = ToPoint(d)) {
        CalendarInterval iv;
        if (since) {
          iv.start = point;
          iv.open_end = true;
        } else {
          iv.end = point;
          iv.open_start = true;
        }
        consider(date->end, iv);
      }
    }
  }
  return best;
}

std::optional<Candidate> DateAt(const Tokens &tokens, std::size_t i,
                                int pub_year) {
  auto date = ParseDate(tokens, i, false, false);
  if (!date) return std::nullopt;
  PartialDate d = date->date;
  if (!d.year) d.year = pub_year;
  auto point = ToPoint(d);
  if (!point) return std::nullopt;
  return Candidate{date->end, EntityType::kDate, *point, NormFlag::kNone};
}

bool IsRelativeUnit(const Tokens &tokens, std::size_t i) {
  if (i >= tokens.size()) return false;
  const std::string &w = tokens[i].lower;
  return w == "day" || w == "morning" || w == "afternoon" || w == "evening" ||
         w == "night" || w == "week" || w == "fortnight" || w == "month" ||
         w == "year";
}

std::optional<Candidate> RelativeAt(const Tokens &tokens, std::size_t i) {
  const std::string &w = tokens[i].lower;
  auto relative = [](std::size_t end) {
    return Candidate{end, EntityType::kDate, std::nullopt, NormFlag::kRelative};
  };
  if (w == "yesterday" || w == "today" || w == "tomorrow") {
    return relative(i + 1);
  }
  if ((w == "next" || w == "following" || w == "previous" ||
       w == "preceding" || w == "same") &&
      IsRelativeUnit(tokens, i + 1)) {
    return relative(i + 2);
  }
  // the beginning of June, the end of the year
  if (w == "the" && i + 2 < tokens.size() && tokens[i + 2].lower == "of") {
    const std::string &part = tokens[i + 1].lower;
    if (part == "beginning" || part == "end" || part == "middle" ||
        part == "close") {
      if (auto date = ParseDate(tokens, i + 3, true, false)) {
        return relative(date->end);
      }
      if (TokenIs(tokens, i + 3, "the") && IsRelativeUnit(tokens, i + 4)) {
        return relative(i + 5);
      }
    }
  }
  return std::nullopt;
}

std::optional<bool> MeridiemAt(const Tokens &tokens, std::size_t i) {
  if (TokenIs(tokens, i, "a.m.")) return false;
  if (TokenIs(tokens, i, "p.m.")) return true;
  return std::nullopt;
}

std::optional<Candidate> TimeAt(const Tokens &tokens, std::size_t i) {
  const std::string &w = tokens[i].lower;
  auto time = [](std::size_t end, int hour, int minute) {
    return Candidate{end, EntityType::kTime, ClockTime{hour, minute},
                     NormFlag::kNone};
  };
  if (w == "noon" || w == "midday" || w == "mid-day") return time(i + 1, 12, 0);
  if (w == "midnight") return time(i + 1, 0, 0);

  // H:MM, H.MM, or H, with an optional meridiem.
  std::optional<int> hour, minute;
  bool colon = false;
  std::size_t sep = w.find_first_of(":.");
  if (sep == std::string::npos) {
    hour = ParseSmallInt(w, 2);
    if (!hour) {
      if (auto spelled = SpelledNumberValue(w)) hour = *spelled;
    }
    minute = 0;
  } else {
    colon = w[sep] == ':';
    hour = ParseSmallInt(std::string_view(w).substr(0, sep), 2);
    std::string_view mm = std::string_view(w).substr(sep + 1);
    if (mm.size() == 2) minute = ParseSmallInt(mm, 2);
  }
  if (!hour || !minute || *minute > 59) return std::nullopt;

  if (auto pm = MeridiemAt(tokens, i + 1)) {
    if (*hour < 1 || *hour > 12) return std::nullopt;
    return time(i + 2, *hour % 12 + (*pm ? 12 : 0), *minute);
  }
  if (sep == std::string::npos && TokenIs(tokens, i + 1, "o'clock")) {
    if (*hour < 1 || *hour > 12) return std::nullopt;
    return time(i + 2, *hour, 0);
  }
  if (colon && *hour <= 23) return time(i + 1, *hour, *minute);
  return std::nullopt;
}

struct UnitWord {
  DurationUnit unit;
  double factor;
  bool plural;
};

std::optional<UnitWord> DurationUnitAt(const Tokens &tokens, std::size_t i) {
  if (i >= tokens.size()) return std::nullopt;
  std::string_view w = tokens[i].lower;
  bool plural = EndsWith(w, "s");
  if (plural) w.remove_suffix(1);
  if (w == "hour") return UnitWord{DurationUnit::kHour, 1, plural};
  if (w == "day") return UnitWord{DurationUnit::kDay, 1, plural};
  if (w == "week") return UnitWord{DurationUnit::kWeek, 1, plural};
  if (w == "fortnight") return UnitWord{DurationUnit::kWeek, 2, plural};
  if (w == "month") return UnitWord{DurationUnit::kMonth, 1, plural};
  if (w == "year") return UnitWord{DurationUnit::kYear, 1, plural};
  return std::nullopt;
}

std::optional<Candidate> DurationAt(const Tokens &tokens, std::size_t i) {
  const std::string &w = tokens[i].lower;
  auto duration = [](std::size_t end, double magnitude, UnitWord unit) {
    return Candidate{end, EntityType::kDuration,
                     Duration{magnitude * unit.factor, unit.unit},
                     NormFlag::kNone};
  };
  auto vague = [](std::size_t end) {
    return Candidate{end, EntityType::kDuration, std::nullopt,
                     NormFlag::kUnnormalizable};
  };

  // half an hour
  if (w == "half" && (TokenIs(tokens, i + 1, "a") || TokenIs(tokens, i + 1, "an"))) {
    if (auto unit = DurationUnitAt(tokens, i + 2); unit && !unit->plural) {
      return duration(i + 3, 0.5, *unit);
    }
  }
  if (auto number = ParseNumberAt(tokens, i, true)) {
    auto unit = DurationUnitAt(tokens, number->end);
    if (unit && number->value > 0 && !(number->article && unit->plural)) {
      return duration(number->end + 1, number->value, *unit);
    }
  }

  // a long time, some time
  if (w == "a" && i + 2 < tokens.size() &&
      (tokens[i + 1].lower == "long" || tokens[i + 1].lower == "short") &&
      (tokens[i + 2].lower == "time" || tokens[i + 2].lower == "period")) {
    return vague(i + 3);
  }
  if (w == "some" && TokenIs(tokens, i + 1, "time")) return vague(i + 2);

  // several days, a few weeks
  std::size_t q = i;
  if (w == "a" && TokenIs(tokens, i + 1, "few")) q = i + 1;
  const std::string &quant = tokens[q].lower;
  if (quant == "few" || quant == "several" || quant == "some" ||
      quant == "many") {
    if (auto unit = DurationUnitAt(tokens, q + 1); unit && unit->plural) {
      return vague(q + 2);
    }
  }

  if (auto unit = DurationUnitAt(tokens, i); unit && unit->plural) {
    return vague(i + 1);
  }
  if (w == "winter" || w == "summer" || w == "spring" || w == "autumn") {
    return vague(i + 1);
  }
  return std::nullopt;
}

}  // namespace

std::vector<EntityAnnotation> RecognizeTemporal(std::string_view text,
                                                const Tokens &tokens,
                                                int pub_year) {
  std::vector<EntityAnnotation> out;
  std::size_t i = 0;
  while (i < tokens.size()) {
    std::optional<Candidate> best;
    // Earlier grammars win ties on length.
    for (auto candidate :
         {RangeAt(tokens, i, pub_year), DateAt(tokens, i, pub_year),
          TimeAt(tokens, i), DurationAt(tokens, i), RelativeAt(tokens, i)}) {
      if (candidate && (!best || candidate->end > best->end)) best = candidate;
    }
    if (!best) {
      ++i;
      continue;
    }
    EntityAnnotation entity = MakeMention(text, tokens, i, best->end,
                                          best->type);
    entity.normalized = best->value;
    entity.flag = best->flag;
    out.push_back(std::move(entity));
    i = best->end;
  }
  return out;
}

}  // namespace epicorpus
