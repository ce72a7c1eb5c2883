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

#include "epicorpus/annotation/standoff.h"

#include <charconv>
#include <map>
#include <optional>

#include "epicorpus/common/error.h"
#include "epicorpus/common/text_util.h"

namespace epicorpus {

namespace {

std::string Flatten(std::string_view s) {
  std::string out(s);
  for (char &c : out) {
    if (c == '\n' || c == '\r' || c == '\t') c = ' ';
  }
  return out;
}

template <typename T>
std::optional<T> ParseNumber(std::string_view s) {
  T value{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

std::vector<std::string_view> Words(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && s[i] == ' ') ++i;
    std::size_t start = i;
    while (i < s.size() && s[i] != ' ') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

// One T line after the first pass.
struct TextBound {
  bool zone = false;
  std::size_t index = 0;  // into doc.zones or doc.entities
};

class StandoffParser {
 public:
  StandoffParser(std::string_view text, const std::string &source)
      : source_(source) {
    doc_.text = std::string(text);
  }

  AnnotatedDocument Run(std::string_view ann) {
    std::vector<std::pair<std::size_t, std::string>> deferred;
    std::size_t line_no = 0;
    for (const std::string &raw : Split(ann, '\n')) {
      ++line_no;
      std::string line = raw;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (Trim(line).empty()) continue;
      switch (line[0]) {
        case 'T':
          ParseTextBound(line_no, line);
          break;
        case 'A':
        case 'M':
        case '#':
          deferred.emplace_back(line_no, line);
          break;
        case 'R':
        case 'E':
        case 'N':
          break;
        default:
          throw ParseError(source_, line_no,
                           "unrecognised annotation line '" + line + "'");
      }
    }
    // Attributes and notes may precede their T line.
    for (const auto &[n, line] : deferred) {
      if (line[0] == '#') {
        ParseNote(n, line);
      } else if (line[0] == 'A') {
        ParseAttribute(n, line);
      }
    }
    SortZones(doc_.zones);
    SortEntities(doc_.entities);
    return std::move(doc_);
  }

 private:
  [[noreturn]] void Fail(ErrorKind kind, std::size_t line,
                         const std::string &message) {
    throw Error(kind, source_ + ":" + std::to_string(line) + ": " + message);
  }

  void ParseTextBound(std::size_t line_no, const std::string &line) {
    std::vector<std::string> fields = Split(line, '\t');
    if (fields.size() < 2) {
      throw ParseError(source_, line_no, "T line needs an id and a span");
    }
    const std::string &id = fields[0];
    if (ids_.count(id)) throw ParseError(source_, line_no, "duplicate id " + id);
    if (fields[1].find(';') != std::string::npos) {
      throw ParseError(source_, line_no, "discontinuous spans are not supported");
    }
    auto words = Words(fields[1]);
    if (words.size() != 3) {
      throw ParseError(source_, line_no, "expected 'label start end'");
    }
    std::string label(words[0]);
    auto start = ParseNumber<std::size_t>(words[1]);
    auto end = ParseNumber<std::size_t>(words[2]);
    if (!start || !end) throw ParseError(source_, line_no, "bad offsets");
    Span span{*start, *end};
    if (span.start > span.end || span.end > doc_.text.size()) {
      Fail(ErrorKind::kOutOfBounds, line_no,
           "span " + DescribeSpanText(span) + " outside text of length " +
               std::to_string(doc_.text.size()));
    }
    if (ZoneSchema::Default().Contains(label)) {
      ids_[id] = TextBound{true, doc_.zones.size()};
      doc_.zones.push_back(ZoneAnnotation{label, span, std::nullopt});
      return;
    }
    if (auto type = ParseEntityType(label)) {
      EntityAnnotation e;
      e.type = *type;
      e.span = span;
      e.surface = std::string(span.text_of(doc_.text));
      e.provenance = Provenance::kManual;
      ids_[id] = TextBound{false, doc_.entities.size()};
      doc_.entities.push_back(std::move(e));
      return;
    }
    Fail(ErrorKind::kUnknownLabel, line_no, "unknown label '" + label + "'");
  }

  const TextBound &Lookup(std::size_t line_no, std::string_view id) {
    auto it = ids_.find(std::string(id));
    if (it == ids_.end()) {
      Fail(ErrorKind::kMissingReference, line_no,
           "reference to missing annotation " + std::string(id));
    }
    return it->second;
  }

  void ParseNote(std::size_t line_no, const std::string &line) {
    std::vector<std::string> fields = Split(line, '\t');
    if (fields.size() < 2) throw ParseError(source_, line_no, "bad note line");
    auto words = Words(fields[1]);
    if (words.size() != 2) throw ParseError(source_, line_no, "bad note line");
    const TextBound &target = Lookup(line_no, words[1]);
    if (words[0] != "AnnotatorNotes" || target.zone) return;
    std::string note;
    for (std::size_t i = 2; i < fields.size(); ++i) {
      if (i > 2) note += '\t';
      note += fields[i];
    }
    doc_.entities[target.index].corrected = note;
  }

  void ParseAttribute(std::size_t line_no, const std::string &line) {
    std::vector<std::string> fields = Split(line, '\t');
    if (fields.size() < 2) {
      throw ParseError(source_, line_no, "bad attribute line");
    }
    auto words = Words(fields[1]);
    if (words.size() < 2 || words.size() > 3) {
      throw ParseError(source_, line_no, "bad attribute line");
    }
    const TextBound &target = Lookup(line_no, words[1]);
    std::string_view name = words[0];
    std::optional<std::string_view> value;
    if (words.size() == 3) value = words[2];

    if (target.zone) {
      if (name != "Page") return;
      auto page = value ? ParseNumber<int>(*value) : std::nullopt;
      if (!page) throw ParseError(source_, line_no, "bad page number");
      doc_.zones[target.index].page_number = *page;
      return;
    }
    EntityAnnotation &e = doc_.entities[target.index];
    if (name == "Automatic") {
      e.provenance = Provenance::kAutomatic;
    } else if (name == "Normalized") {
      if (!value) throw ParseError(source_, line_no, "missing value");
      if (*value == "unnormalizable") {
        e.flag = NormFlag::kUnnormalizable;
      } else if (*value == "relative") {
        e.flag = NormFlag::kRelative;
      } else if (auto parsed = ParseNormalized(*value)) {
        e.normalized = *parsed;
      } else {
        throw ParseError(source_, line_no,
                         "bad normalized value '" + std::string(*value) + "'");
      }
    } else if (name == "Geo") {
      if (!value) throw ParseError(source_, line_no, "missing value");
      std::vector<std::string> parts = Split(*value, ',');
      std::optional<double> lat, lon;
      std::optional<std::int64_t> id;
      if (parts.size() == 3) {
        lat = ParseNumber<double>(parts[0]);
        lon = ParseNumber<double>(parts[1]);
        id = ParseNumber<std::int64_t>(parts[2]);
      }
      if (!lat || !lon || !id) {
        throw ParseError(source_, line_no, "bad geo value");
      }
      e.geo = GeoPoint{*lat, *lon, *id};
    }
  }

  static std::string DescribeSpanText(const Span &span) {
    return "(" + std::to_string(span.start) + "," + std::to_string(span.end) +
           ")";
  }

  std::string source_;
  AnnotatedDocument doc_;
  std::map<std::string, TextBound> ids_;
};

}  // namespace

AnnotatedDocument ParseStandoff(std::string_view text, std::string_view ann,
                                const std::string &source) {
  return StandoffParser(text, source).Run(ann);
}

std::string EmitStandoff(const AnnotatedDocument &doc) {
  std::vector<ZoneAnnotation> zones = doc.zones;
  std::vector<EntityAnnotation> entities = doc.entities;
  SortZones(zones);
  SortEntities(entities);

  std::string out;
  std::size_t t = 0, a = 0, note = 0;
  auto text_bound = [&](std::string_view label, const Span &span) {
    std::string id = "T" + std::to_string(++t);
    std::string quoted = span.valid_for(doc.text.size())
                             ? Flatten(span.text_of(doc.text))
                             : std::string();
    out += id + "\t" + std::string(label) + " " + std::to_string(span.start) +
           " " + std::to_string(span.end) + "\t" + quoted + "\n";
    return id;
  };
  auto attribute = [&](std::string_view name, const std::string &id,
                       const std::string &value) {
    out += "A" + std::to_string(++a) + "\t" + std::string(name) + " " + id;
    if (!value.empty()) out += " " + value;
    out += "\n";
  };

  for (const ZoneAnnotation &zone : zones) {
    std::string id = text_bound(zone.label, zone.span);
    if (zone.page_number) {
      attribute("Page", id, std::to_string(*zone.page_number));
    }
  }
  for (const EntityAnnotation &e : entities) {
    std::string id = text_bound(EntityTypeName(e.type), e.span);
    if (e.normalized) {
      attribute("Normalized", id, FormatNormalized(*e.normalized));
    }
    if (e.flag == NormFlag::kUnnormalizable) {
      attribute("Normalized", id, "unnormalizable");
    } else if (e.flag == NormFlag::kRelative) {
      attribute("Normalized", id, "relative");
    }
    if (e.provenance == Provenance::kAutomatic) attribute("Automatic", id, "");
    if (e.geo) {
      attribute("Geo", id,
                FormatDouble(e.geo->latitude) + "," +
                    FormatDouble(e.geo->longitude) + "," +
                    std::to_string(e.geo->gaz_id));
    }
    if (e.corrected) {
      out += "#" + std::to_string(++note) + "\tAnnotatorNotes " + id + "\t" +
             Flatten(*e.corrected) + "\n";
    }
  }
  return out;
}

}  // namespace epicorpus
