#ifndef CYCLEREP_DOCUMENT_HPP
#define CYCLEREP_DOCUMENT_HPP

// JSON documents for cycles, transformation systems and reports.
//
// Cycle document (format_version "1.0"):
//   {"format_version": "1.0", "kind": "cycle", "field": "Q" | "Q(i)",
//    "t": 2, "dims": [1, 2], "maps": [[[1], [0]], [[2, 3]]]}
// maps[i] lists the rows of A_{i+1}, an m_{[i+2]} x m_{i+1} matrix. Entries are
// JSON integers or strings "p/q" (Q) and "a+c*i" style strings (Q(i)). A map
// with no rows is written [] and takes its column count from dims.

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cyclerep/cycle.hpp"
#include "cyclerep/poly.hpp"

namespace cyclerep {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kFormatVersion = "1.0";

Json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const Json& doc);
/// The "field" member; ParseError when missing or not "Q" / "Q(i)".
std::string document_field(const Json& doc, const std::string& where);

namespace detail {

[[noreturn]] inline void parse_fail(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what);
}

inline std::size_t count_from_json(const Json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 0) parse_fail(where, "expected a non-negative integer");
  return j.get<std::size_t>();
}

}  // namespace detail

template <ExactField F>
Json scalar_to_json(const F& x) {
  if constexpr (std::is_same_v<F, Rational>) {
    if (x.is_integer() && x.value().get_num().fits_slong_p()) return Json(x.value().get_num().get_si());
  } else {
    if (x.im().is_zero()) return scalar_to_json(x.re());
  }
  return Json(x.str());
}

template <ExactField F>
F scalar_from_json(const Json& j, const std::string& where) {
  try {
    if (j.is_number_integer()) return F(j.get<long>());
    if (j.is_string()) return F::parse(j.get<std::string>());
  } catch (const ParseError& e) {
    detail::parse_fail(where, e.what());
  } catch (const Json::exception& e) {
    detail::parse_fail(where, e.what());
  }
  if (j.is_number_float()) detail::parse_fail(where, "floating-point entry " + j.dump() + " not allowed; write \"p/q\"");
  detail::parse_fail(where, "expected an integer or a string scalar, got " + j.dump());
}

template <ExactField F>
Json matrix_to_json(const Matrix<F>& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

/// Nested row arrays; an empty array is a 0 x cols_if_empty matrix.
template <ExactField F>
Matrix<F> matrix_from_json(const Json& j, std::size_t cols_if_empty, const std::string& where) {
  if (!j.is_array()) detail::parse_fail(where, "expected an array of rows");
  if (j.empty()) return Matrix<F>(0, cols_if_empty);
  for (std::size_t r = 0; r < j.size(); ++r)
    if (!j[r].is_array()) detail::parse_fail(where + "[" + std::to_string(r) + "]", "expected a row array");
  const std::size_t cols = j[0].size();
  Matrix<F> m(j.size(), cols);
  for (std::size_t r = 0; r < j.size(); ++r) {
    const std::string rw = where + "[" + std::to_string(r) + "]";
    if (j[r].size() != cols)
      detail::parse_fail(rw, "row has " + std::to_string(j[r].size()) + " entries, expected " + std::to_string(cols));
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = scalar_from_json<F>(j[r][c], rw + "[" + std::to_string(c) + "]");
  }
  return m;
}

template <ExactField F>
Json cycle_to_json(const Cycle<F>& c) {
  Json doc;
  doc["format_version"] = std::string(kFormatVersion);
  doc["kind"] = "cycle";
  doc["field"] = std::string(F::kFieldName);
  doc["t"] = c.t;
  doc["dims"] = c.dims;
  Json maps = Json::array();
  for (const auto& a : c.maps) maps.push_back(matrix_to_json(a));
  doc["maps"] = std::move(maps);
  return doc;
}

inline void check_header(const Json& doc, const std::string& where) {
  if (!doc.is_object()) detail::parse_fail(where, "document must be a JSON object");
  if (!doc.contains("format_version") || !doc["format_version"].is_string())
    detail::parse_fail(where, "missing string member \"format_version\"");
  const auto v = doc["format_version"].get<std::string>();
  if (v.rfind("1.", 0) != 0) detail::parse_fail(where, "unsupported format_version \"" + v + "\"");
}

/// Parses the structure only; shape consistency is left to validate().
template <ExactField F>
Cycle<F> cycle_from_json(const Json& doc, const std::string& where = "cycle") {
  check_header(doc, where);
  if (document_field(doc, where) != F::kFieldName) detail::parse_fail(where, "field mismatch");
  for (const char* key : {"t", "dims", "maps"})
    if (!doc.contains(key)) detail::parse_fail(where, std::string("missing member \"") + key + "\"");
  Cycle<F> c;
  c.t = detail::count_from_json(doc["t"], where + ".t");
  if (!doc["dims"].is_array()) detail::parse_fail(where + ".dims", "expected an array");
  for (std::size_t k = 0; k < doc["dims"].size(); ++k)
    c.dims.push_back(detail::count_from_json(doc["dims"][k], where + ".dims[" + std::to_string(k) + "]"));
  if (!doc["maps"].is_array()) detail::parse_fail(where + ".maps", "expected an array");
  for (std::size_t k = 0; k < doc["maps"].size(); ++k) {
    const std::size_t cols = k < c.dims.size() ? c.dims[k] : 0;
    c.maps.push_back(matrix_from_json<F>(doc["maps"][k], cols, where + ".maps[" + std::to_string(k) + "]"));
  }
  return c;
}

template <ExactField F>
Json system_to_json(const TransformationSystem<F>& phi) {
  Json doc;
  doc["format_version"] = std::string(kFormatVersion);
  doc["kind"] = "transformation_system";
  doc["field"] = std::string(F::kFieldName);
  doc["t"] = phi.phis.size();
  Json phis = Json::array();
  for (const auto& p : phi.phis) phis.push_back(matrix_to_json(p));
  doc["phis"] = std::move(phis);
  return doc;
}

template <ExactField F>
TransformationSystem<F> system_from_json(const Json& doc, const std::string& where = "witness") {
  check_header(doc, where);
  if (document_field(doc, where) != F::kFieldName) detail::parse_fail(where, "field mismatch");
  if (!doc.contains("phis") || !doc["phis"].is_array()) detail::parse_fail(where, "missing array member \"phis\"");
  TransformationSystem<F> phi;
  for (std::size_t k = 0; k < doc["phis"].size(); ++k)
    phi.phis.push_back(matrix_from_json<F>(doc["phis"][k], 0, where + ".phis[" + std::to_string(k) + "]"));
  return phi;
}

inline Json chains_to_json(const std::vector<ChainSummand>& chains) {
  Json out = Json::array();
  for (const auto& c : chains) out.push_back({{"end", c.end_vertex}, {"len", c.length}, {"mult", c.multiplicity}});
  return out;
}

template <ExactField F>
Json poly_to_json(const Poly<F>& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(c.str());
  return {{"text", p.str()}, {"coeffs_low_to_high", std::move(coeffs)}};
}

}  // namespace cyclerep

#endif  // CYCLEREP_DOCUMENT_HPP
