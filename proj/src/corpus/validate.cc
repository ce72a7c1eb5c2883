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

#include "epicorpus/corpus/validate.h"

#include <algorithm>

#include "epicorpus/annotation/zones.h"

namespace epicorpus {

namespace {

bool ValidPoint(const CalendarPoint &point) {
  switch (point.granularity) {
    case Granularity::kYear:
      if (point.month || point.day) return false;
      break;
    case Granularity::kMonth:
      if (!point.month || point.day) return false;
      break;
    case Granularity::kDay:
      if (!point.month || !point.day) return false;
      break;
  }
  if (point.month && (*point.month < 1 || *point.month > 12)) return false;
  if (point.day &&
      (*point.day < 1 || *point.day > DaysInMonth(point.year, *point.month))) {
    return false;
  }
  return true;
}

}  // namespace

std::string DescribeSpan(const Span &span) {
  return "(" + std::to_string(span.start) + "," + std::to_string(span.end) +
         ")";
}

void CanonicalizeViolations(std::vector<Violation> &violations) {
  std::sort(violations.begin(), violations.end());
  violations.erase(std::unique(violations.begin(), violations.end()),
                   violations.end());
}

std::vector<Violation> ValidateNormalizedValue(const NormalizedValue &value) {
  std::vector<Violation> out;
  const std::string rendered = FormatNormalized(value);
  if (const auto *point = std::get_if<CalendarPoint>(&value)) {
    if (!ValidPoint(*point)) {
      out.push_back({"invalid-calendar-point", rendered});
    }
  } else if (const auto *interval = std::get_if<CalendarInterval>(&value)) {
    if (interval->open_start != !interval->start.has_value() ||
        interval->open_end != !interval->end.has_value()) {
      out.push_back({"inconsistent-open-flag", rendered});
    }
    if ((interval->start && !ValidPoint(*interval->start)) ||
        (interval->end && !ValidPoint(*interval->end))) {
      out.push_back({"invalid-calendar-point", rendered});
    } else if (interval->start && interval->end &&
               FirstDayOf(*interval->start) > LastDayOf(*interval->end)) {
      out.push_back({"interval-start-after-end", rendered});
    }
  } else if (const auto *time = std::get_if<ClockTime>(&value)) {
    if (time->hour < 0 || time->hour > 23 || time->minute < 0 ||
        time->minute > 59) {
      out.push_back({"invalid-clock-time", rendered});
    }
  } else if (const auto *duration = std::get_if<Duration>(&value)) {
    if (!(duration->magnitude > 0)) {
      out.push_back({"non-positive-duration", rendered});
    }
  } else if (const auto *length = std::get_if<Length>(&value)) {
    if (!(length->meters > 0)) {
      out.push_back({"non-positive-length", rendered});
    }
  }
  return out;
}

std::vector<Violation> ValidateMetadata(const DocumentMetadata &meta) {
  std::vector<Violation> out;
  if (meta.doc_id.empty()) {
    out.push_back({"empty-doc-id", "document id is empty"});
  }
  if (meta.publication_year < kMinPublicationYear ||
      meta.publication_year > kMaxPublicationYear) {
    out.push_back({"publication-year-out-of-range",
                   "publication year " + std::to_string(meta.publication_year) +
                       " outside [1850, 1960]"});
  }
  CanonicalizeViolations(out);
  return out;
}

std::vector<Violation> ValidateDocument(const AnnotatedDocument &doc) {
  std::vector<Violation> out = ValidateMetadata(doc.metadata);
  std::vector<Violation> rest = ValidateAnnotations(doc);
  out.insert(out.end(), rest.begin(), rest.end());
  CanonicalizeViolations(out);
  return out;
}

std::vector<Violation> ValidateAnnotations(const AnnotatedDocument &doc) {
  std::vector<Violation> out;
  const std::size_t size = doc.text.size();

  std::vector<Violation> zone_report =
      ValidateZones(doc.zones, ZoneSchema::Default(), size);
  out.insert(out.end(), zone_report.begin(), zone_report.end());

  for (const EntityAnnotation &entity : doc.entities) {
    const std::string where = std::string(EntityTypeName(entity.type)) + " " +
                              DescribeSpan(entity.span);
    if (!entity.span.valid_for(size)) {
      out.push_back({"span-out-of-bounds", "entity " + where +
                                               " outside text of length " +
                                               std::to_string(size)});
    } else if (entity.span.text_of(doc.text) != entity.surface) {
      out.push_back({"surface-mismatch", "entity " + where + " surface '" +
                                             entity.surface +
                                             "' differs from text '" +
                                             std::string(entity.span.text_of(
                                                 doc.text)) +
                                             "'"});
    }
    if (entity.corrected && *entity.corrected == entity.surface) {
      out.push_back({"redundant-correction",
                     "entity " + where + " correction equals its surface"});
    }
    if (RequiresNormalization(entity.type) && !entity.normalized &&
        entity.flag == NormFlag::kNone) {
      out.push_back({"missing-normalization",
                     "entity " + where + " has neither a value nor a flag"});
    }
    if (entity.normalized) {
      for (Violation v : ValidateNormalizedValue(*entity.normalized)) {
        v.message = "entity " + where + ": " + v.message;
        out.push_back(std::move(v));
      }
    }
    if (entity.geo && (entity.geo->latitude < -90 || entity.geo->latitude > 90 ||
                       entity.geo->longitude < -180 ||
                       entity.geo->longitude > 180)) {
      out.push_back({"invalid-coordinates", "entity " + where});
    }
    if (!doc.sentences.empty() && entity.span.valid_for(size)) {
      bool inside = false;
      for (const Sentence &sentence : doc.sentences) {
        if (sentence.span.start <= entity.span.start &&
            entity.span.end <= sentence.span.end) {
          inside = true;
          break;
        }
      }
      if (!inside) {
        out.push_back({"entity-crosses-sentence",
                       "entity " + where + " is not inside one sentence"});
      }
    }
  }

  std::vector<const PageWordBox *> aligned;
  for (const PageWordBox &box : doc.word_boxes) {
    const std::string where = "box '" + box.text + "' on page " +
                              std::to_string(box.page) + " at " +
                              std::to_string(box.x) + "," +
                              std::to_string(box.y);
    if (box.w <= 0 || box.h <= 0) {
      out.push_back({"degenerate-box", where + " has non-positive size"});
    }
    if (box.char_span) {
      if (!box.char_span->valid_for(size)) {
        out.push_back({"span-out-of-bounds", where + " span " +
                                                 DescribeSpan(*box.char_span)});
      }
      aligned.push_back(&box);
    }
  }
  for (std::size_t i = 1; i < aligned.size(); ++i) {
    if (aligned[i]->char_span->start < aligned[i - 1]->char_span->end) {
      out.push_back({"box-order", "box spans " +
                                      DescribeSpan(*aligned[i - 1]->char_span) +
                                      " and " +
                                      DescribeSpan(*aligned[i]->char_span) +
                                      " overlap or are out of order"});
    }
  }

  CanonicalizeViolations(out);
  return out;
}

}  // namespace epicorpus
