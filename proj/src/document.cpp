// Copyright 2026 The mvk Authors
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

#include "mvk/document.hpp"

#include <json.hpp>

#include "mvk/error.hpp"

namespace mvk {
namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void schema_error(const std::string& what) {
  throw InvariantError("document schema", what);
}

const Json& field(const Json& obj, const char* name) {
  auto it = obj.find(name);
  if (it == obj.end()) schema_error(std::string("missing field '") + name + "'");
  return *it;
}

std::vector<std::int64_t> int_list(const Json& j, const char* name) {
  if (!j.is_array()) schema_error(std::string("'") + name + "' must be a list");
  std::vector<std::int64_t> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) {
      schema_error(std::string("'") + name + "' must hold integers");
    }
    out.push_back(v.get<std::int64_t>());
  }
  return out;
}

Rational rational_field(const Json& j) {
  if (!j.is_string()) schema_error("rationals must be \"p/q\" strings");
  return Rational::parse(j.get<std::string>());
}

Json rationals(std::span<const Rational> values) {
  Json arr = Json::array();
  for (const auto& v : values) arr.push_back(v.str());
  return arr;
}

MvElement parse_element(const Json& j) {
  const Json& vals = field(j, "values");
  if (!vals.is_array() || vals.empty()) {
    schema_error("'values' must be a nonempty list");
  }
  std::vector<Rational> values;
  for (const auto& v : vals) values.push_back(rational_field(v));
  std::vector<std::int64_t> dens;
  if (auto it = j.find("denominators"); it != j.end()) {
    dens = int_list(*it, "denominators");
  } else {
    for (const auto& v : values) dens.push_back(v.denominator_i64());
  }
  return ChainProduct(std::move(dens)).element(values);
}

PLFunction parse_pl(const Json& j) {
  const Json& pts = field(j, "points");
  if (!pts.is_array()) schema_error("'points' must be a list");
  std::vector<PLPoint> points;
  for (const auto& p : pts) {
    if (!p.is_array() || p.size() != 2) {
      schema_error("each point must be a [\"x\",\"y\"] pair");
    }
    points.push_back({rational_field(p[0]), rational_field(p[1])});
  }
  std::string cls = "mcnaughton";
  if (auto it = j.find("class"); it != j.end()) {
    if (!it->is_string()) schema_error("'class' must be a string");
    cls = it->get<std::string>();
  }
  if (cls == "mcnaughton") return PLFunction(std::move(points));
  if (cls == "rational") return PLFunction::rational(std::move(points));
  schema_error("unknown pl1 class '" + cls + "'");
}

}  // namespace

Document parse_document(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw ParseError(e.byte, e.what());
  }
  if (!j.is_object()) schema_error("document must be an object");
  const Json& kind = field(j, "kind");
  if (!kind.is_string()) schema_error("'kind' must be a string");
  const std::string k = kind.get<std::string>();
  if (k == "chain_product") {
    return ChainProduct(int_list(field(j, "denominators"), "denominators"));
  }
  if (k == "element") return parse_element(j);
  if (k == "pl1") return parse_pl(j);
  if (k == "lgroup_element") {
    UnitalLGroup g(int_list(field(j, "unit"), "unit"));
    return g.element(int_list(field(j, "coords"), "coords"));
  }
  schema_error("unknown kind '" + k + "'");
}

DocumentKind kind_of(const Document& doc) {
  return static_cast<DocumentKind>(doc.index());
}

std::string_view kind_name(DocumentKind kind) {
  switch (kind) {
    case DocumentKind::kChainProduct:
      return "chain_product";
    case DocumentKind::kElement:
      return "element";
    case DocumentKind::kPL1:
      return "pl1";
    case DocumentKind::kLGroupElement:
      return "lgroup_element";
  }
  return "";
}

std::string to_document(const ChainProduct& algebra) {
  Json j;
  j["kind"] = "chain_product";
  j["denominators"] = std::vector<std::int64_t>(
      algebra.denominators().begin(), algebra.denominators().end());
  return j.dump();
}

std::string to_document(const MvElement& element) {
  Json j;
  j["kind"] = "element";
  j["denominators"] = std::vector<std::int64_t>(
      element.algebra().denominators().begin(),
      element.algebra().denominators().end());
  j["values"] = rationals(element.values());
  return j.dump();
}

std::string to_document(const PLFunction& f) {
  Json j;
  j["kind"] = "pl1";
  if (!f.is_mcnaughton()) j["class"] = "rational";
  Json pts = Json::array();
  for (const auto& p : f.points()) pts.push_back({p.x.str(), p.y.str()});
  j["points"] = std::move(pts);
  return j.dump();
}

std::string to_document(const LGroupElement& g) {
  Json j;
  j["kind"] = "lgroup_element";
  j["unit"] = std::vector<std::int64_t>(g.group().unit().begin(),
                                        g.group().unit().end());
  j["coords"] = std::vector<std::int64_t>(g.coords().begin(),
                                          g.coords().end());
  return j.dump();
}

std::string to_document(const Document& doc) {
  return std::visit([](const auto& v) { return to_document(v); }, doc);
}

}  // namespace mvk
