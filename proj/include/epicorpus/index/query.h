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

#ifndef EPICORPUS_INDEX_QUERY_H_
#define EPICORPUS_INDEX_QUERY_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "epicorpus/corpus/model.h"

namespace epicorpus {

// Query surface syntax:
//
//   plague                    term (lowercased)
//   "the plague"              phrase
//   plague~1                  fuzzy term, 1 or 2 edits
//   a AND b, a OR b, NOT a    boolean operators; juxtaposition means AND
//   ( ... )                   grouping
//   zone:causes               zone label; restricts sibling terms to
//                             positions inside such a zone
//   type:person               document has an entity of that type
//   year:1896  year:[1894 TO 1896]          publication year, inclusive
//   date:1897-03  date:[1896-09 TO 1897]    entity dates overlapping
//   geo:[18,72 TO 20,74]      resolved location inside lat,lon box
//   location:Bombay  location:"Hong Kong"   main location
//
// Range ends may be "*" for an open end. Operators are upper case; "and",
// "or", "not" are ordinary terms.
enum class QueryKind {
  kTerm,
  kPhrase,
  kFuzzy,
  kAnd,
  kOr,
  kNot,
  kZone,
  kType,
  kYear,
  kDate,
  kGeo,
  kLocation,
};

struct GeoBox {
  double min_lat = -90;
  double min_lon = -180;
  double max_lat = 90;
  double max_lon = 180;

  bool Contains(double lat, double lon) const {
    return lat >= min_lat && lat <= max_lat && lon >= min_lon &&
           lon <= max_lon;
  }
};

struct QueryNode {
  QueryKind kind = QueryKind::kTerm;
  std::vector<std::string> terms;     // term, phrase, fuzzy
  int max_edits = 0;                  // fuzzy
  std::vector<QueryNode> children;    // and, or, not
  std::string value;                  // zone label, location
  EntityType entity_type = EntityType::kPerson;
  int year_from = 0, year_to = 0;     // inclusive
  std::int64_t day_from = 0, day_to = 0;  // inclusive day numbers
  GeoBox box;
  std::size_t position = 0;  // byte offset in the query string

  // True for nodes that match token positions.
  bool IsPositional() const {
    return kind == QueryKind::kTerm || kind == QueryKind::kPhrase ||
           kind == QueryKind::kFuzzy;
  }
};

// Throws QuerySyntaxError carrying the byte offset of the problem.
QueryNode ParseQuery(std::string_view query);

// Canonical S-expression, e.g. "(and (fuzzy plague 1) (zone causes))".
std::string DescribeQuery(const QueryNode &node);

}  // namespace epicorpus

#endif  // EPICORPUS_INDEX_QUERY_H_
