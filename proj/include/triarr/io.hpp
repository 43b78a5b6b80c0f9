#pragma once

// JSON encoding of fields, elements and arrangements.
//
//   {"field": {"p": 2, "k": 2, "modulus": [1, 1, 1]},
//    "lines": [[c0, c1, c2], ...], "labels": ["L_1", ...]}
//
// Prime-field elements are integers; extension-field elements are
// coefficient lists, low degree first. Integers are also accepted for
// extension fields and read as elements of the prime subfield.

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "triarr/error.hpp"
#include "triarr/field.hpp"
#include "triarr/incidence.hpp"
#include "triarr/projective.hpp"

namespace triarr {

using Json = nlohmann::ordered_json;

inline Json to_json(const FieldSpec& f) {
  return Json{{"p", f.characteristic()}, {"k", f.degree()}, {"modulus", f.modulus()}};
}

inline FieldSpec field_from_json(const Json& j) {
  try {
    const auto p = j.at("p").get<std::int64_t>();
    const int k = j.contains("k") ? j.at("k").get<int>() : 1;
    std::optional<Coefficients> modulus;
    if (j.contains("modulus") && !j.at("modulus").is_null()) modulus = j.at("modulus").get<Coefficients>();
    return make_field(p, k, modulus);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("bad field object: ") + e.what());
  }
}

inline Json to_json(const FieldElement& x) {
  if (x.field().is_prime_field()) return x.code();
  return x.coefficients();
}

inline FieldElement element_from_json(const Json& j, const FieldSpec& f) {
  if (j.is_number_integer()) return f.element(j.get<std::int64_t>());
  if (j.is_array()) {
    const auto c = j.get<Coefficients>();
    if (static_cast<int>(c.size()) > f.degree())
      throw Error(ErrorCode::ParseError, "element " + j.dump() + " has more than k coefficients");
    return f.from_coefficients(c);
  }
  throw Error(ErrorCode::ParseError, "field element must be an integer or coefficient list, got " + j.dump());
}

inline Json to_json(const ProjLine& l) { return Json::array({to_json(l[0]), to_json(l[1]), to_json(l[2])}); }
inline Json to_json(const ProjPoint& p) { return Json::array({to_json(p[0]), to_json(p[1]), to_json(p[2])}); }

inline Json to_json(const TVector& t) {
  Json j = Json::object();
  for (auto it = t.rbegin(); it != t.rend(); ++it) j[std::to_string(it->first)] = it->second;
  return j;
}

inline Json to_json(const Arrangement& a) {
  Json j{{"field", to_json(a.field())}, {"lines", Json::array()}};
  for (const auto& l : a.lines()) j["lines"].push_back(to_json(l));
  if (a.has_labels()) j["labels"] = a.labels();
  return j;
}

inline Arrangement arrangement_from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "arrangement must be a JSON object");
  if (!j.contains("field")) throw Error(ErrorCode::ParseError, "arrangement lacks \"field\"");
  if (!j.contains("lines") || !j.at("lines").is_array())
    throw Error(ErrorCode::ParseError, "arrangement lacks a \"lines\" array");
  const FieldSpec f = field_from_json(j.at("field"));
  std::vector<ProjLine> lines;
  for (const auto& row : j.at("lines")) {
    if (!row.is_array() || row.size() != 3)
      throw Error(ErrorCode::ParseError, "line " + row.dump() + " is not a triple");
    lines.emplace_back(element_from_json(row[0], f), element_from_json(row[1], f), element_from_json(row[2], f));
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    try {
      labels = j.at("labels").get<std::vector<std::string>>();
    } catch (const Json::exception&) {
      throw Error(ErrorCode::ParseError, "\"labels\" must be a list of strings");
    }
  }
  return Arrangement(f, std::move(lines), std::move(labels));
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot write '" + path + "'");
  out << text;
  if (!out) throw Error(ErrorCode::IoError, "write to '" + path + "' failed");
}

inline Arrangement read_arrangement(const std::string& path) {
  const std::string text = read_text_file(path);
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::ParseError, "'" + path + "': " + e.what());
  }
  try {
    return arrangement_from_json(j);
  } catch (const Error& e) {
    throw Error(e.code(), "'" + path + "': " + e.detail());
  }
}

inline void write_arrangement(const std::string& path, const Arrangement& a) {
  write_text_file(path, to_json(a).dump(2) + "\n");
}

}  // namespace triarr
