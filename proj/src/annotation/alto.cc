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

#include "epicorpus/annotation/alto.h"

#include <cmath>
#include <sstream>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include "epicorpus/common/error.h"
#include "epicorpus/common/text_util.h"

namespace epicorpus {

namespace {

namespace pt = boost::property_tree;

std::string_view LocalName(std::string_view name) {
  std::size_t colon = name.rfind(':');
  return colon == std::string_view::npos ? name : name.substr(colon + 1);
}

int Coordinate(const pt::ptree &attrs, const char *name,
               const std::string &where) {
  auto value = attrs.get_optional<std::string>(name);
  if (!value) {
    throw Error(ErrorKind::kParse, where + " is missing " + name);
  }
  try {
    std::size_t used = 0;
    double d = std::stod(*value, &used);
    if (used != value->size() || !std::isfinite(d)) throw std::exception();
    return static_cast<int>(std::lround(d));
  } catch (const std::exception &) {
    throw Error(ErrorKind::kParse,
                where + " has a bad " + name + " '" + *value + "'");
  }
}

void Collect(const pt::ptree &node, int page, const std::string &source,
             std::vector<PageWordBox> &out) {
  for (const auto &[name, child] : node) {
    if (name == "<xmlattr>" || name == "<xmlcomment>") continue;
    if (LocalName(name) == "String") {
      std::string where = source + ": String element " +
                          std::to_string(out.size() + 1);
      const pt::ptree empty;
      const pt::ptree &attrs = child.get_child("<xmlattr>", empty);
      if (auto id = attrs.get_optional<std::string>("ID")) {
        where += " (ID " + *id + ")";
      }
      auto content = attrs.get_optional<std::string>("CONTENT");
      if (!content) throw Error(ErrorKind::kParse, where + " is missing CONTENT");
      PageWordBox box;
      box.page = page;
      box.text = *content;
      box.x = Coordinate(attrs, "HPOS", where);
      box.y = Coordinate(attrs, "VPOS", where);
      box.w = Coordinate(attrs, "WIDTH", where);
      box.h = Coordinate(attrs, "HEIGHT", where);
      out.push_back(std::move(box));
      continue;
    }
    Collect(child, page, source, out);
  }
}

}  // namespace

std::vector<PageWordBox> ParseAlto(std::string_view xml, int page,
                                   const std::string &source) {
  std::vector<PageWordBox> out;
  if (Trim(xml).empty()) return out;
  pt::ptree tree;
  std::istringstream in{std::string(xml)};
  try {
    pt::read_xml(in, tree);
  } catch (const pt::xml_parser_error &e) {
    throw ParseError(source, e.line(), e.message());
  }
  Collect(tree, page, source, out);
  return out;
}

std::optional<int> AltoPageFromFilename(const std::filesystem::path &path,
                                        std::string_view doc_id) {
  if (path.extension() != ".xml") return std::nullopt;
  std::string stem = path.stem().string();
  std::string prefix = std::string(doc_id) + "_p";
  if (!StartsWith(stem, prefix)) return std::nullopt;
  std::string_view digits = std::string_view(stem).substr(prefix.size());
  if (digits.empty() || digits.size() > 6 || !IsAllDigits(digits)) {
    return std::nullopt;
  }
  return std::stoi(std::string(digits));
}

}  // namespace epicorpus
