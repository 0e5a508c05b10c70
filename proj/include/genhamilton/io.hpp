#pragma once

// JSON input files: group files and character table files.
//
// Integers may be JSON integers or decimal strings (needed beyond 64 bits);
// JSON floats are rejected.  Generators are 1-based image arrays or cycle
// strings such as "(1,2)(3,4)".

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "genhamilton/characters.hpp"
#include "genhamilton/error.hpp"
#include "genhamilton/permutation.hpp"
#include "genhamilton/rational.hpp"

namespace genhamilton {

using Json = nlohmann::ordered_json;

struct GroupSpec {
  std::string name;
  std::size_t degree = 0;
  std::vector<Permutation> generators;
  std::optional<std::vector<std::vector<Permutation>>> normal_subgroups;
  std::optional<std::vector<std::vector<Permutation>>> maximal_subgroups;
};

struct CharTableSpec {
  std::string name;
  CharTableData data;
  /// False when the file has no "permutation_characters" field.
  bool has_characters = false;
};

namespace detail {

inline const Json& require_field(const Json& obj, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(std::string("missing field \"") + key + "\"");
  return *it;
}

inline Integer json_integer(const Json& v, const std::string& where) {
  if (v.is_number_unsigned()) return Integer(v.get<std::uint64_t>());
  if (v.is_number_integer()) return Integer(v.get<std::int64_t>());
  if (v.is_string()) {
    try {
      return parse_integer(v.get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  if (v.is_number_float()) {
    throw ParseError(where + ": floating-point value; write large integers as decimal strings");
  }
  throw ParseError(where + ": expected an integer");
}

inline std::vector<Integer> json_integer_list(const Json& v, const std::string& where) {
  if (!v.is_array()) throw ParseError(where + ": expected an array");
  std::vector<Integer> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(json_integer(v[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

inline Permutation json_permutation(const Json& v, std::size_t degree, const std::string& where) {
  try {
    if (v.is_string()) return Permutation::from_cycles(degree, v.get<std::string>());
    if (!v.is_array()) throw ParseError("expected an image array or a cycle string");
    std::vector<long long> images;
    for (const Json& x : v) {
      if (!x.is_number_integer()) throw ParseError("image arrays must contain integers");
      images.push_back(x.get<long long>());
    }
    if (images.size() != degree) {
      throw ParseError("image array has length " + std::to_string(images.size()) + ", expected " +
                       std::to_string(degree));
    }
    return Permutation::from_one_based(images);
  } catch (const Error& e) {
    throw ParseError(where + ": " + e.what());
  }
}

inline std::vector<Permutation> json_generators(const Json& v, std::size_t degree, const std::string& where) {
  if (!v.is_array()) throw ParseError(where + ": expected an array of permutations");
  std::vector<Permutation> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(json_permutation(v[i], degree, where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

inline std::optional<std::vector<std::vector<Permutation>>> json_subgroup_list(const Json& obj, const char* key,
                                                                              std::size_t degree) {
  const auto it = obj.find(key);
  if (it == obj.end()) return std::nullopt;
  if (!it->is_array()) throw ParseError(std::string(key) + ": expected an array of generator lists");
  std::vector<std::vector<Permutation>> out;
  for (std::size_t i = 0; i < it->size(); ++i) {
    out.push_back(json_generators((*it)[i], degree, std::string(key) + "[" + std::to_string(i) + "]"));
  }
  return out;
}

inline std::string json_name(const Json& obj, const std::string& fallback) {
  const auto it = obj.find("name");
  if (it == obj.end()) return fallback;
  if (!it->is_string()) throw ParseError("\"name\" must be a string");
  return it->get<std::string>();
}

}  // namespace detail

inline Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline GroupSpec parse_group_spec(const Json& obj, const std::string& default_name = "G") {
  if (!obj.is_object()) throw ParseError("group file must contain a JSON object");
  GroupSpec spec;
  spec.name = detail::json_name(obj, default_name);
  const Integer degree = detail::json_integer(detail::require_field(obj, "degree"), "degree");
  if (degree < 0 || degree > Permutation::kMaxDegree) throw ParseError("degree out of range");
  spec.degree = static_cast<std::size_t>(degree);
  spec.generators = detail::json_generators(detail::require_field(obj, "generators"), spec.degree, "generators");
  spec.normal_subgroups = detail::json_subgroup_list(obj, "normal_subgroups", spec.degree);
  spec.maximal_subgroups = detail::json_subgroup_list(obj, "maximal_subgroups", spec.degree);
  return spec;
}

inline CharTableSpec parse_chartable_spec(const Json& obj, const std::string& default_name = "G") {
  if (!obj.is_object()) throw ParseError("character table file must contain a JSON object");
  CharTableSpec spec;
  spec.name = detail::json_name(obj, default_name);
  spec.data.class_lengths = detail::json_integer_list(detail::require_field(obj, "class_lengths"), "class_lengths");
  spec.data.element_orders =
      detail::json_integer_list(detail::require_field(obj, "element_orders"), "element_orders");
  const auto it = obj.find("permutation_characters");
  if (it != obj.end() && !it->is_null()) {
    if (!it->is_array()) throw ParseError("permutation_characters: expected an array");
    spec.has_characters = true;
    for (std::size_t k = 0; k < it->size(); ++k) {
      spec.data.characters.push_back(CharacterVector{
          detail::json_integer_list((*it)[k], "permutation_characters[" + std::to_string(k) + "]")});
    }
  }
  try {
    spec.data.validate();
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
  return spec;
}

inline GroupSpec load_group_spec(const std::filesystem::path& path) {
  return parse_group_spec(parse_json_text(read_file(path)), path.stem().string());
}

inline CharTableSpec load_chartable_spec(const std::filesystem::path& path) {
  return parse_chartable_spec(parse_json_text(read_file(path)), path.stem().string());
}

/// Integers that fit in 64 bits are written as JSON numbers, larger ones as
/// decimal strings, so that files round-trip through parse_chartable_spec.
inline Json integer_to_json(const Integer& value) {
  if (value >= std::numeric_limits<std::int64_t>::min() && value <= std::numeric_limits<std::int64_t>::max()) {
    return Json(static_cast<std::int64_t>(value));
  }
  return Json(value.str());
}

inline Json chartable_to_json(const CharTableSpec& spec) {
  Json out = Json::object();
  out["name"] = spec.name;
  const auto list = [](const std::vector<Integer>& values) {
    Json arr = Json::array();
    for (const Integer& v : values) arr.push_back(integer_to_json(v));
    return arr;
  };
  out["class_lengths"] = list(spec.data.class_lengths);
  out["element_orders"] = list(spec.data.element_orders);
  if (spec.has_characters) {
    Json chars = Json::array();
    for (const CharacterVector& chi : spec.data.characters) chars.push_back(list(chi.values));
    out["permutation_characters"] = std::move(chars);
  }
  return out;
}

}  // namespace genhamilton
