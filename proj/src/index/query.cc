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

#include "epicorpus/index/query.h"

#include <charconv>
#include <limits>
#include <optional>

#include "epicorpus/common/error.h"
#include "epicorpus/common/text_util.h"
#include "epicorpus/pipeline/tokenizer.h"

namespace epicorpus {

namespace {

enum class Lex { kWord, kPhrase, kField, kLParen, kRParen, kAnd, kOr, kNot, kEnd };

struct LexToken {
  Lex kind = Lex::kEnd;
  std::string text;   // word, phrase body, or field value
  std::string field;  // field name
  std::size_t position = 0;
  std::size_t value_position = 0;
};

bool IsField(std::string_view name) {
  return name == "zone" || name == "type" || name == "year" ||
         name == "date" || name == "geo" || name == "location";
}

bool EndsWord(char c) {
  return IsSpace(c) || c == '(' || c == ')' || c == '"';
}

std::vector<LexToken> Lexer(std::string_view q) {
  std::vector<LexToken> out;
  std::size_t i = 0;
  while (true) {
    while (i < q.size() && IsSpace(q[i])) ++i;
    LexToken tok;
    tok.position = i;
    if (i == q.size()) {
      out.push_back(tok);
      return out;
    }
    char c = q[i];
    if (c == '(' || c == ')') {
      tok.kind = c == '(' ? Lex::kLParen : Lex::kRParen;
      ++i;
      out.push_back(tok);
      continue;
    }
    if (c == '"') {
      std::size_t close = q.find('"', i + 1);
      if (close == std::string_view::npos) {
        throw QuerySyntaxError(i, "unterminated phrase");
      }
      tok.kind = Lex::kPhrase;
      tok.text = std::string(q.substr(i + 1, close - i - 1));
      i = close + 1;
      if (i < q.size() && q[i] == '~') {
        throw QuerySyntaxError(i, "fuzzy matching applies to single words");
      }
      out.push_back(tok);
      continue;
    }
    std::size_t j = i;
    while (j < q.size() && IsAsciiAlpha(q[j])) ++j;
    if (j < q.size() && q[j] == ':' && IsField(q.substr(i, j - i))) {
      tok.kind = Lex::kField;
      tok.field = std::string(q.substr(i, j - i));
      std::size_t k = j + 1;
      tok.value_position = k;
      if (k >= q.size() || IsSpace(q[k]) || q[k] == ')') {
        throw QuerySyntaxError(k, "missing value for " + tok.field + ":");
      }
      if (q[k] == '[') {
        std::size_t close = q.find(']', k);
        if (close == std::string_view::npos) {
          throw QuerySyntaxError(k, "unterminated range");
        }
        tok.text = std::string(q.substr(k, close - k + 1));
        i = close + 1;
      } else if (q[k] == '"') {
        std::size_t close = q.find('"', k + 1);
        if (close == std::string_view::npos) {
          throw QuerySyntaxError(k, "unterminated quoted value");
        }
        tok.text = std::string(q.substr(k + 1, close - k - 1));
        i = close + 1;
      } else {
        std::size_t e = k;
        while (e < q.size() && !EndsWord(q[e])) ++e;
        tok.text = std::string(q.substr(k, e - k));
        i = e;
      }
      out.push_back(tok);
      continue;
    }
    std::size_t e = i;
    while (e < q.size() && !EndsWord(q[e])) ++e;
    tok.text = std::string(q.substr(i, e - i));
    tok.kind = tok.text == "AND"   ? Lex::kAnd
               : tok.text == "OR"  ? Lex::kOr
               : tok.text == "NOT" ? Lex::kNot
                                   : Lex::kWord;
    i = e;
    out.push_back(tok);
  }
}

std::vector<std::string> SearchTerms(std::string_view text) {
  std::vector<std::string> out;
  for (const Token &t : Tokenize(text)) {
    if (!IsPunctuationToken(t)) out.push_back(t.lower);
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

// "[A TO B]" -> {A, B}; a bare value V -> {V, V}.
std::pair<std::string, std::string> RangeEnds(const LexToken &tok) {
  std::string_view v = tok.text;
  if (v.empty() || v[0] != '[') return {tok.text, tok.text};
  v = v.substr(1, v.size() - 2);
  std::vector<std::string> parts;
  for (const std::string &p : Split(v, ' ')) {
    if (!Trim(p).empty()) parts.emplace_back(Trim(p));
  }
  if (parts.size() != 3 || parts[1] != "TO") {
    throw QuerySyntaxError(tok.value_position,
                           "expected [from TO to] for " + tok.field + ":");
  }
  return {parts[0], parts[2]};
}

class Parser {
 public:
  explicit Parser(std::vector<LexToken> tokens) : tokens_(std::move(tokens)) {}

  QueryNode Run() {
    if (Peek().kind == Lex::kEnd) throw QuerySyntaxError(0, "empty query");
    QueryNode node = ParseOr();
    if (Peek().kind != Lex::kEnd) {
      throw QuerySyntaxError(Peek().position, "unexpected ')'");
    }
    return node;
  }

 private:
  const LexToken &Peek() const { return tokens_[pos_]; }
  const LexToken &Next() { return tokens_[pos_++]; }

  static QueryNode Combine(QueryKind kind, std::vector<QueryNode> parts,
                           std::size_t position) {
    if (parts.size() == 1) return std::move(parts[0]);
    QueryNode node;
    node.kind = kind;
    node.position = position;
    for (QueryNode &p : parts) {
      if (p.kind == kind) {
        for (QueryNode &c : p.children) node.children.push_back(std::move(c));
      } else {
        node.children.push_back(std::move(p));
      }
    }
    return node;
  }

  QueryNode ParseOr() {
    std::size_t start = Peek().position;
    std::vector<QueryNode> parts;
    parts.push_back(ParseAnd());
    while (Peek().kind == Lex::kOr) {
      Next();
      parts.push_back(ParseAnd());
    }
    return Combine(QueryKind::kOr, std::move(parts), start);
  }

  QueryNode ParseAnd() {
    std::size_t start = Peek().position;
    std::vector<QueryNode> parts;
    parts.push_back(ParseUnary());
    while (true) {
      Lex k = Peek().kind;
      if (k == Lex::kEnd || k == Lex::kOr || k == Lex::kRParen) break;
      if (k == Lex::kAnd) Next();
      parts.push_back(ParseUnary());
    }
    return Combine(QueryKind::kAnd, std::move(parts), start);
  }

  QueryNode ParseUnary() {
    if (Peek().kind == Lex::kNot) {
      QueryNode node;
      node.kind = QueryKind::kNot;
      node.position = Next().position;
      node.children.push_back(ParseUnary());
      return node;
    }
    return ParsePrimary();
  }

  QueryNode ParsePrimary() {
    const LexToken &tok = Next();
    switch (tok.kind) {
      case Lex::kLParen: {
        if (Peek().kind == Lex::kRParen) {
          throw QuerySyntaxError(Peek().position, "empty group");
        }
        QueryNode inner = ParseOr();
        if (Peek().kind != Lex::kRParen) {
          throw QuerySyntaxError(Peek().position, "missing ')'");
        }
        Next();
        return inner;
      }
      case Lex::kPhrase:
        return Words(tok, tok.text, "empty phrase");
      case Lex::kWord:
        return Word(tok);
      case Lex::kField:
        return Field(tok);
      case Lex::kEnd:
        throw QuerySyntaxError(tok.position, "query ends after an operator");
      case Lex::kRParen:
        throw QuerySyntaxError(tok.position, "unexpected ')'");
      default:
        throw QuerySyntaxError(tok.position,
                               "operator '" + tok.text + "' needs an operand");
    }
  }

  static QueryNode Words(const LexToken &tok, std::string_view text,
                         const char *empty_message) {
    QueryNode node;
    node.position = tok.position;
    node.terms = SearchTerms(text);
    if (node.terms.empty()) throw QuerySyntaxError(tok.position, empty_message);
    node.kind = node.terms.size() == 1 ? QueryKind::kTerm : QueryKind::kPhrase;
    return node;
  }

  static QueryNode Word(const LexToken &tok) {
    std::size_t tilde = tok.text.rfind('~');
    if (tilde == std::string::npos || tilde == 0) {
      return Words(tok, tok.text, "no searchable characters");
    }
    std::string_view edits = std::string_view(tok.text).substr(tilde + 1);
    QueryNode node = Words(tok, tok.text.substr(0, tilde),
                           "no searchable characters");
    if (node.kind != QueryKind::kTerm) {
      throw QuerySyntaxError(tok.position, "fuzzy matching takes one word");
    }
    node.kind = QueryKind::kFuzzy;
    if (edits.empty()) {
      node.max_edits = 2;
    } else if (edits == "1" || edits == "2") {
      node.max_edits = edits[0] - '0';
    } else {
      throw QuerySyntaxError(tok.position + tilde + 1,
                             "edit distance must be 1 or 2");
    }
    return node;
  }

  static QueryNode Field(const LexToken &tok) {
    QueryNode node;
    node.position = tok.position;
    node.value = tok.text;
    const std::size_t at = tok.value_position;
    if (tok.field == "zone") {
      node.kind = QueryKind::kZone;
      node.value = ToLower(tok.text);
      if (!ZoneSchema::Default().Contains(node.value)) {
        throw QuerySyntaxError(at, "unknown zone '" + tok.text + "'");
      }
    } else if (tok.field == "type") {
      node.kind = QueryKind::kType;
      auto type = ParseEntityType(ToLower(tok.text));
      if (!type) throw QuerySyntaxError(at, "unknown entity type '" + tok.text + "'");
      node.entity_type = *type;
    } else if (tok.field == "location") {
      node.kind = QueryKind::kLocation;
      node.value = std::string(Trim(tok.text));
      if (node.value.empty()) throw QuerySyntaxError(at, "empty location");
    } else if (tok.field == "year") {
      node.kind = QueryKind::kYear;
      auto [from, to] = RangeEnds(tok);
      auto year = [&](const std::string &s, int open) {
        if (s == "*") return open;
        auto y = ParseNumber<int>(s);
        if (!y) throw QuerySyntaxError(at, "bad year '" + s + "'");
        return *y;
      };
      node.year_from = year(from, std::numeric_limits<int>::min());
      node.year_to = year(to, std::numeric_limits<int>::max());
      if (node.year_from > node.year_to) {
        throw QuerySyntaxError(at, "year range is reversed");
      }
    } else if (tok.field == "date") {
      node.kind = QueryKind::kDate;
      auto [from, to] = RangeEnds(tok);
      auto point = [&](const std::string &s) {
        auto p = ParseCalendarPoint(s);
        bool ok = p && (!p->month || (*p->month >= 1 && *p->month <= 12)) &&
                  (!p->day || (*p->day >= 1 &&
                               *p->day <= DaysInMonth(p->year, *p->month)));
        if (!ok) throw QuerySyntaxError(at, "bad date '" + s + "'");
        return *p;
      };
      node.day_from = from == "*" ? std::numeric_limits<std::int64_t>::min()
                                  : FirstDayOf(point(from));
      node.day_to = to == "*" ? std::numeric_limits<std::int64_t>::max()
                              : LastDayOf(point(to));
      if (node.day_from > node.day_to) {
        throw QuerySyntaxError(at, "date range is reversed");
      }
    } else {
      node.kind = QueryKind::kGeo;
      if (tok.text.empty() || tok.text[0] != '[') {
        throw QuerySyntaxError(at, "geo: takes [lat,lon TO lat,lon]");
      }
      auto [from, to] = RangeEnds(tok);
      auto corner = [&](const std::string &s) {
        std::vector<std::string> p = Split(s, ',');
        std::optional<double> lat, lon;
        if (p.size() == 2) {
          lat = ParseNumber<double>(p[0]);
          lon = ParseNumber<double>(p[1]);
        }
        if (!lat || !lon || *lat < -90 || *lat > 90 || *lon < -180 ||
            *lon > 180) {
          throw QuerySyntaxError(at, "bad coordinate '" + s + "'");
        }
        return std::make_pair(*lat, *lon);
      };
      auto [lat1, lon1] = corner(from);
      auto [lat2, lon2] = corner(to);
      if (lat1 > lat2 || lon1 > lon2) {
        throw QuerySyntaxError(at, "geo box corners are reversed");
      }
      node.box = GeoBox{lat1, lon1, lat2, lon2};
    }
    return node;
  }

  std::vector<LexToken> tokens_;
  std::size_t pos_ = 0;
};

std::string Join(const std::vector<std::string> &words) {
  std::string out;
  for (const std::string &w : words) out += " " + w;
  return out;
}

}  // namespace

QueryNode ParseQuery(std::string_view query) {
  return Parser(Lexer(query)).Run();
}

std::string DescribeQuery(const QueryNode &node) {
  auto children = [&](const char *name) {
    std::string out = std::string("(") + name;
    for (const QueryNode &c : node.children) out += " " + DescribeQuery(c);
    return out + ")";
  };
  auto bound = [](auto v, auto open_low, auto open_high) {
    return v == open_low || v == open_high ? std::string("*")
                                           : std::to_string(v);
  };
  switch (node.kind) {
    case QueryKind::kTerm:
      return "(term" + Join(node.terms) + ")";
    case QueryKind::kPhrase:
      return "(phrase" + Join(node.terms) + ")";
    case QueryKind::kFuzzy:
      return "(fuzzy" + Join(node.terms) + " " +
             std::to_string(node.max_edits) + ")";
    case QueryKind::kAnd:
      return children("and");
    case QueryKind::kOr:
      return children("or");
    case QueryKind::kNot:
      return children("not");
    case QueryKind::kZone:
      return "(zone " + node.value + ")";
    case QueryKind::kType:
      return "(type " + std::string(EntityTypeName(node.entity_type)) + ")";
    case QueryKind::kYear:
      return "(year " +
             bound(node.year_from, std::numeric_limits<int>::min(),
                   std::numeric_limits<int>::max()) +
             " " +
             bound(node.year_to, std::numeric_limits<int>::min(),
                   std::numeric_limits<int>::max()) +
             ")";
    case QueryKind::kDate:
      return "(date " +
             bound(node.day_from, std::numeric_limits<std::int64_t>::min(),
                   std::numeric_limits<std::int64_t>::max()) +
             " " +
             bound(node.day_to, std::numeric_limits<std::int64_t>::min(),
                   std::numeric_limits<std::int64_t>::max()) +
             ")";
    case QueryKind::kGeo:
      return "(geo " + FormatDouble(node.box.min_lat) + "," +
             FormatDouble(node.box.min_lon) + " " +
             FormatDouble(node.box.max_lat) + "," +
             FormatDouble(node.box.max_lon) + ")";
    case QueryKind::kLocation:
      return "(location " + node.value + ")";
  }
  return "";
}

}  // namespace epicorpus
