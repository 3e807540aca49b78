#pragma once

// Seed documents: {"n", "r", "B", "names", "gradings"} in that order, written
// without whitespace so equal seeds serialize to equal bytes.

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "gradalg/error.hpp"
#include "gradalg/intlin.hpp"
#include "gradalg/seed.hpp"

namespace gradalg {

namespace detail {

inline std::string int_list(const IntVector& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
  return s + "]";
}

inline Integer json_integer(const nlohmann::json& j, const char* what) {
  if (j.is_number_integer()) return j.is_number_unsigned() ? Integer(j.get<unsigned long>()) : Integer(j.get<long>());
  fail(ErrorKind::ParseError, std::string(what) + " must be an integer in the signed 64-bit range");
}

inline IntVector json_int_list(const nlohmann::json& j, const char* what) {
  if (!j.is_array()) fail(ErrorKind::ParseError, std::string(what) + " must be an array");
  IntVector out;
  for (const auto& x : j) out.push_back(json_integer(x, what));
  return out;
}

inline std::size_t json_count(const nlohmann::json& doc, const char* key) {
  if (!doc.contains(key)) fail(ErrorKind::ParseError, std::string("missing field \"") + key + "\"");
  Integer v = json_integer(doc.at(key), key);
  if (v < 0) fail(ErrorKind::BadShape, std::string(key) + " must be nonnegative");
  return v.get_ui();
}

}  // namespace detail

inline std::string serialize_grading(const Grading& g) {
  std::string s = "{\"factors\":" + detail::int_list(g.group.factors()) + ",\"vectors\":[";
  for (std::size_t i = 0; i < g.values.size(); ++i) s += (i ? "," : "") + detail::int_list(g.values[i]);
  return s + "]}";
}

inline std::string serialize_seed(const GradedSeed& gs) {
  const Seed& s = gs.seed;
  std::string out = "{\"n\":" + std::to_string(s.n) + ",\"r\":" + std::to_string(s.r) + ",\"B\":[";
  for (std::size_t i = 0; i < s.B.rows(); ++i) out += (i ? "," : "") + detail::int_list(s.B.row(i));
  out += "],\"names\":[";
  for (std::size_t i = 0; i < s.names.size(); ++i) out += (i ? "," : "") + nlohmann::json(s.names[i]).dump();
  out += "],\"gradings\":[";
  for (std::size_t i = 0; i < gs.gradings.size(); ++i) out += (i ? "," : "") + serialize_grading(gs.gradings[i]);
  return out + "]}";
}

inline Grading grading_from_json(const nlohmann::json& j, std::size_t n) {
  if (!j.is_object()) fail(ErrorKind::ParseError, "grading must be an object");
  if (!j.contains("factors") || !j.contains("vectors")) fail(ErrorKind::ParseError, "grading needs factors and vectors");
  IntVector factors = detail::json_int_list(j.at("factors"), "factors");
  const auto& vecs = j.at("vectors");
  if (!vecs.is_array() || vecs.size() != n) fail(ErrorKind::BadShape, "grading needs one vector per variable");
  // Factors equal to 1 are trivial summands; their coordinates are dropped.
  std::vector<std::size_t> keep;
  IntVector kept;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i] < 0) fail(ErrorKind::InvalidGrading, "invariant factors must be nonnegative");
    if (factors[i] != 1) keep.push_back(i), kept.push_back(factors[i]);
  }
  Grading g{FgAbelianGroup(kept), {}};
  for (const auto& v : vecs) {
    IntVector full = detail::json_int_list(v, "grading vector");
    if (full.size() != factors.size()) fail(ErrorKind::BadShape, "grading vector length differs from factors");
    IntVector e;
    for (auto i : keep) e.push_back(full[i]);
    g.values.push_back(g.group.reduce(e));
  }
  return g;
}

/// Parses and validates a seed document.
inline GradedSeed seed_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) fail(ErrorKind::ParseError, "seed document must be a JSON object");
  GradedSeed gs;
  Seed& s = gs.seed;
  s.n = detail::json_count(doc, "n");
  s.r = detail::json_count(doc, "r");
  if (s.r > s.n) fail(ErrorKind::BadShape, "r exceeds n");
  if (!doc.contains("B") || !doc.at("B").is_array()) fail(ErrorKind::ParseError, "B must be an array of rows");
  const auto& rows = doc.at("B");
  if (rows.size() != s.n) fail(ErrorKind::BadShape, "B must have n rows");
  s.B = IntMatrix(s.n, s.r);
  for (std::size_t i = 0; i < s.n; ++i) {
    IntVector row = detail::json_int_list(rows[i], "B row");
    if (row.size() != s.r) fail(ErrorKind::BadShape, "B rows must have r entries");
    for (std::size_t j = 0; j < s.r; ++j) s.B(i, j) = row[j];
  }
  if (doc.contains("names")) {
    const auto& names = doc.at("names");
    if (!names.is_array() || names.size() != s.n) fail(ErrorKind::BadShape, "names must list n strings");
    for (const auto& x : names) {
      if (!x.is_string()) fail(ErrorKind::ParseError, "names must be strings");
      s.names.push_back(x.get<std::string>());
    }
  } else {
    s.names = default_names(s.n);
  }
  if (doc.contains("gradings")) {
    const auto& gr = doc.at("gradings");
    if (!gr.is_array()) fail(ErrorKind::ParseError, "gradings must be an array");
    for (const auto& g : gr) gs.gradings.push_back(grading_from_json(g, s.n));
  }
  require_valid(gs);
  return gs;
}

inline GradedSeed parse_seed(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::ParseError, std::string("invalid JSON: ") + e.what());
  }
  return seed_from_json(doc);
}

}  // namespace gradalg
