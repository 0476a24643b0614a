#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include "tlsig/seifert.hpp"

namespace tlsig {

/// On-disk description of a link:
///   {"name": str, "components": int, "seifert": [[int]],
///    "linking_numbers": {"1,2": int, ...}}
/// Integers outside the 64-bit range are written as decimal strings.
struct LinkFile {
  std::string name;
  int components = 1;
  std::vector<std::vector<Integer>> seifert;
  std::optional<LinkingNumbers> linking_numbers;

  SeifertMatrix seifert_matrix() const {
    IntMatrix m(seifert.size(), seifert.size());
    for (std::size_t i = 0; i < seifert.size(); ++i)
      for (std::size_t j = 0; j < seifert.size(); ++j) m(i, j) = seifert[i][j];
    return SeifertMatrix(std::move(m), components, name);
  }

  friend bool operator==(const LinkFile& a, const LinkFile& b) {
    return a.name == b.name && a.components == b.components && a.seifert == b.seifert &&
           a.linking_numbers == b.linking_numbers;
  }
};

namespace detail {

inline std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

inline Integer json_integer(const nlohmann::json& v, const std::string& where) {
  if (v.is_number_integer()) {
    if (v.is_number_unsigned()) return Integer(std::to_string(v.get<std::uint64_t>()));
    return Integer(std::to_string(v.get<std::int64_t>()));
  }
  if (v.is_string()) {
    try {
      return parse_integer(v.get<std::string>());
    } catch (const InvalidArgument&) {
    }
  }
  throw ParseError(where + ": expected an integer, got " + v.dump());
}

}  // namespace detail

/// Integers that fit in 64 bits become JSON numbers, others decimal strings.
inline nlohmann::ordered_json integer_to_json(const Integer& x) {
  if (x.fits_slong_p()) return static_cast<std::int64_t>(x.get_si());
  return x.get_str();
}

inline LinkFile parse_link_file(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, col] = detail::line_column(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError("malformed JSON", line, col);
  }
  if (!doc.is_object()) throw ParseError("link file must be a JSON object");

  LinkFile lf;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw ParseError("'name' must be a string");
    lf.name = doc["name"].get<std::string>();
  }
  if (!doc.contains("components") || !doc["components"].is_number_integer())
    throw ParseError("'components' must be an integer");
  {
    Integer r = detail::json_integer(doc["components"], "components");
    if (r < 1 || !r.fits_sint_p()) throw ParseError("'components' must be a positive integer");
    lf.components = static_cast<int>(r.get_si());
  }

  if (!doc.contains("seifert") || !doc["seifert"].is_array())
    throw ParseError("'seifert' must be a list of rows");
  const auto& rows = doc["seifert"];
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i].is_array()) throw ParseError("seifert row " + std::to_string(i + 1) + " is not a list");
    std::vector<Integer> row;
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      row.push_back(detail::json_integer(
          rows[i][j], "seifert[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) + "]"));
    if (row.size() != rows.size())
      throw ParseError("Seifert matrix is not square: row " + std::to_string(i + 1) + " has " +
                       std::to_string(row.size()) + " entries, expected " +
                       std::to_string(rows.size()));
    lf.seifert.push_back(std::move(row));
  }

  if (doc.contains("linking_numbers") && !doc["linking_numbers"].is_null()) {
    const auto& lk = doc["linking_numbers"];
    if (!lk.is_object()) throw ParseError("'linking_numbers' must be an object");
    LinkingNumbers out;
    for (const auto& [key, value] : lk.items()) {
      auto comma = key.find(',');
      int i = 0, j = 0;
      try {
        if (comma == std::string::npos) throw InvalidArgument("no comma");
        Integer a = parse_integer(std::string_view(key).substr(0, comma));
        Integer b = parse_integer(std::string_view(key).substr(comma + 1));
        if (!a.fits_sint_p() || !b.fits_sint_p()) throw InvalidArgument("too large");
        i = static_cast<int>(a.get_si());
        j = static_cast<int>(b.get_si());
      } catch (const InvalidArgument&) {
        throw ParseError("bad linking-number key '" + key + "', expected \"i,j\"");
      }
      if (i < 1 || i >= j || j > lf.components)
        throw ParseError("bad linking-number key '" + key + "': need 1 <= i < j <= " +
                         std::to_string(lf.components));
      out[{i, j}] = detail::json_integer(value, "linking_numbers[" + key + "]");
    }
    lf.linking_numbers = std::move(out);
  }
  return lf;
}

inline LinkFile load_link_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_link_file(ss.str());
}

inline nlohmann::ordered_json to_json(const LinkFile& lf) {
  nlohmann::ordered_json j;
  j["name"] = lf.name;
  j["components"] = lf.components;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& r : lf.seifert) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (const auto& x : r) row.push_back(integer_to_json(x));
    rows.push_back(std::move(row));
  }
  j["seifert"] = std::move(rows);
  if (lf.linking_numbers) {
    nlohmann::ordered_json lk = nlohmann::ordered_json::object();
    for (const auto& [key, value] : *lf.linking_numbers)
      lk[std::to_string(key.first) + "," + std::to_string(key.second)] = integer_to_json(value);
    j["linking_numbers"] = std::move(lk);
  }
  return j;
}

inline std::string serialize_link_file(const LinkFile& lf) { return to_json(lf).dump(2) + "\n"; }

}  // namespace tlsig
