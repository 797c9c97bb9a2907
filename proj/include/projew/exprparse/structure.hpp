#pragma once

#include <json.hpp>

#include <map>
#include <string>
#include <utility>

#include "projew/errors.hpp"
#include "projew/exprparse/parser.hpp"
#include "projew/geometry/connection.hpp"

namespace projew::exprparse {

using geometry::ChartConnection;

// Parsed form of a structure file before expression parsing. Connection
// entries are keyed "c_ab" with c, a, b in {1, 2}, giving the coefficient
// with upper index c and lower indices a, b.
struct StructureDoc {
  VarNames vars{};
  std::string name;
  std::string description;
  std::map<std::string, std::string> entries;
};

namespace detail {

inline bool valid_entry_key(const std::string& k) {
  auto idx = [](char c) { return c == '1' || c == '2'; };
  return k.size() == 4 && idx(k[0]) && k[1] == '_' && idx(k[2]) && idx(k[3]);
}

}  // namespace detail

// Structure files are JSON documents:
//
//   {
//     "name": "optional string",
//     "description": "optional string",
//     "variables": ["x", "y"],          // optional, exactly two names
//     "connection": { "1_22": "x*y", "2_11": "-y" }
//   }
//
// Unknown keys are rejected; missing connection entries default to zero.
inline StructureDoc parse_structure_doc(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(),
                     e.byte > 0 ? e.byte - 1 : 0);
  }
  if (!doc.is_object()) throw ParseError("structure file must be a JSON object", 0);

  StructureDoc out;
  for (const auto& [key, value] : doc.items()) {
    if (key == "name" || key == "description") {
      if (!value.is_string())
        throw ParseError("'" + key + "' must be a string", 0);
      (key == "name" ? out.name : out.description) = value.get<std::string>();
    } else if (key == "variables") {
      if (!value.is_array() || value.size() != 2 || !value[0].is_string() ||
          !value[1].is_string())
        throw ParseError("'variables' must be an array of two strings", 0);
      out.vars.first = value[0].get<std::string>();
      out.vars.second = value[1].get<std::string>();
      if (out.vars.first.empty() || out.vars.second.empty() ||
          out.vars.first == out.vars.second)
        throw ParseError("'variables' must be two distinct nonempty names", 0);
    } else if (key == "connection") {
      if (!value.is_object())
        throw ParseError("'connection' must be an object", 0);
      for (const auto& [entry_key, expr] : value.items()) {
        if (!detail::valid_entry_key(entry_key))
          throw ParseError("bad connection index key '" + entry_key +
                               "' (expected c_ab with c,a,b in {1,2})",
                           0);
        if (!expr.is_string())
          throw ParseError("connection entry '" + entry_key +
                               "' must be an expression string",
                           0);
        out.entries[entry_key] = expr.get<std::string>();
      }
    } else {
      throw ParseError("unknown key '" + key + "' in structure file", 0);
    }
  }
  return out;
}

// Builds the torsion-free connection from a parsed document. When both c_ab
// and c_ba are given for a != b their expressions must agree; an entry given
// for one index order is mirrored to the other.
inline ChartConnection to_connection(const StructureDoc& doc) {
  ChartConnection conn(doc.vars);
  bool assigned[2][2][2] = {};
  for (const auto& [key, expr] : doc.entries) {
    int c = key[0] - '1';
    int a = key[2] - '1';
    int b = key[3] - '1';
    RatFunc value;
    try {
      value = parse_expr(expr, doc.vars);
    } catch (const ParseError& e) {
      throw ParseError("in connection entry '" + key + "': " + e.raw_message(),
                       e.offset());
    }
    if (assigned[c][b][a] && !(conn.pi(c, a, b) == value))
      throw ParseError("symmetry violation: entries " + key + " and " +
                           std::string{key[0], '_', key[3], key[2]} +
                           " parse to different expressions",
                       0);
    conn.set_pi(c, a, b, std::move(value));
    assigned[c][a][b] = true;
  }
  return conn;
}

inline ChartConnection parse_structure(const std::string& text) {
  return to_connection(parse_structure_doc(text));
}

}  // namespace projew::exprparse
