#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "superlie/algebra.hpp"
#include "superlie/errors.hpp"

namespace superlie {

inline constexpr const char* kAlgebraFormat = "superlie-algebra";
inline constexpr int kAlgebraVersion = 1;

namespace detail {

inline std::string line_col(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

// Accepts exact integers and decimal strings; rejects anything that would
// have to round.
inline Int json_int(const nlohmann::ordered_json& j, const char* what) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_number_unsigned()) return Int(j.get<std::uint64_t>());
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::runtime_error&) {
      throw InputError(std::string("field '") + what + "' is not an integer string");
    }
  }
  throw InputError(std::string("field '") + what +
                   "' must be an integer or a decimal string (floats are not exact)");
}

inline std::string file_contents(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace detail

// Parses the versioned interchange format:
//   { "format": "superlie-algebra", "version": 1,
//     "dim_even": m, "dim_odd": n,
//     "brackets": [ {"i":., "j":., "coeffs":[{"k":., "num":., "den":.}]} ],
//     "name": optional, "labels": optional }
// Rationals are integer pairs; values that do not fit a JSON integer may be
// given as decimal strings. Unknown versions are rejected.
inline LieSuperalgebra read_algebra_json(const std::string& text) {
  nlohmann::ordered_json j;
  try {
    j = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError("JSON parse error at " + detail::line_col(text, e.byte) + ": " + e.what());
  }
  if (!j.is_object()) throw InputError("algebra file must be a JSON object");
  if (!j.contains("format") || j["format"] != kAlgebraFormat)
    throw InputError("missing or wrong 'format'; expected \"" + std::string(kAlgebraFormat) +
                     "\"");
  if (!j.contains("version") || !j["version"].is_number_integer())
    throw InputError("missing 'version'");
  if (j["version"].get<int>() != kAlgebraVersion)
    throw InputError("unsupported version " + j["version"].dump() + "; this reader handles " +
                     std::to_string(kAlgebraVersion));
  for (const char* field : {"dim_even", "dim_odd"})
    if (!j.contains(field) || !j[field].is_number_integer())
      throw InputError(std::string("missing integer field '") + field + "'");
  long long dim_even = j["dim_even"].get<long long>();
  long long dim_odd = j["dim_odd"].get<long long>();

  BracketTable table;
  if (j.contains("brackets")) {
    if (!j["brackets"].is_array()) throw InputError("'brackets' must be an array");
    for (const auto& entry : j["brackets"]) {
      if (!entry.is_object() || !entry.contains("i") || !entry.contains("j") ||
          !entry.contains("coeffs"))
        throw InputError("bracket entries need fields i, j, coeffs");
      int i = entry["i"].get<int>();
      int jj = entry["j"].get<int>();
      if (table.count({i, jj}))
        throw InputError("duplicate bracket entry (" + std::to_string(i) + "," +
                         std::to_string(jj) + ")");
      std::vector<SparseVec::Term> terms;
      for (const auto& c : entry["coeffs"]) {
        if (!c.is_object() || !c.contains("k") || !c.contains("num") || !c.contains("den"))
          throw InputError("coefficients need fields k, num, den");
        terms.emplace_back(c["k"].get<long long>(),
                           make_rational(detail::json_int(c["num"], "num"),
                                         detail::json_int(c["den"], "den")));
      }
      table[{i, jj}] = SparseVec::from_terms(std::move(terms));
    }
  }

  std::string name = j.value("name", std::string{});
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    if (!j["labels"].is_array()) throw InputError("'labels' must be an array of strings");
    for (const auto& l : j["labels"]) labels.push_back(l.get<std::string>());
  }
  return LieSuperalgebra(dim_even, dim_odd, std::move(table), std::move(name), std::move(labels));
}

inline nlohmann::ordered_json algebra_to_json(const LieSuperalgebra& L) {
  nlohmann::ordered_json j;
  j["format"] = kAlgebraFormat;
  j["version"] = kAlgebraVersion;
  if (!L.name().empty()) j["name"] = L.name();
  j["dim_even"] = L.even_dim();
  j["dim_odd"] = L.dim() - L.even_dim();
  if (!L.labels().empty()) j["labels"] = L.labels();
  auto brackets = nlohmann::ordered_json::array();
  for (const auto& [ij, vec] : L.entries()) {
    nlohmann::ordered_json entry;
    entry["i"] = ij.first;
    entry["j"] = ij.second;
    auto coeffs = nlohmann::ordered_json::array();
    for (const auto& [k, c] : vec.terms()) {
      nlohmann::ordered_json t;
      t["k"] = k;
      Int num = rat_num(c), den = rat_den(c);
      if (num >= std::numeric_limits<std::int64_t>::min() &&
          num <= std::numeric_limits<std::int64_t>::max())
        t["num"] = num.convert_to<std::int64_t>();
      else
        t["num"] = num.str();
      if (den <= std::numeric_limits<std::int64_t>::max())
        t["den"] = den.convert_to<std::int64_t>();
      else
        t["den"] = den.str();
      coeffs.push_back(std::move(t));
    }
    entry["coeffs"] = std::move(coeffs);
    brackets.push_back(std::move(entry));
  }
  j["brackets"] = std::move(brackets);
  return j;
}

inline std::string write_algebra_json(const LieSuperalgebra& L) {
  return algebra_to_json(L).dump(2) + "\n";
}

inline LieSuperalgebra read_algebra_file(const std::string& path) {
  return read_algebra_json(detail::file_contents(path));
}

inline void write_algebra_file(const LieSuperalgebra& L, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << write_algebra_json(L);
}

}  // namespace superlie
