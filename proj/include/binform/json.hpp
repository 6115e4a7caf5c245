#pragma once

// JSON encodings of the library's values. nlohmann::json stores objects in a
// std::map, so dumps come out with sorted keys.

#include <json.hpp>

#include "binform/curves.hpp"

namespace binform {

using Json = nlohmann::json;

namespace detail {

template <class F> auto json_guard(const char *what, F &&f) {
  try {
    return f();
  } catch (const Json::exception &ex) {
    throw InvalidArgument(std::string(what) + ": " + ex.what());
  }
}

inline int json_int(const Json &j, const char *key) {
  if (!j.contains(key) || !j.at(key).is_number_integer())
    throw InvalidArgument(std::string("missing integer field '") + key + "'");
  return j.at(key).get<int>();
}

} // namespace detail

inline Json to_json(const Rational &q) { return to_string(q); }

inline Rational rational_from_json(const Json &j) {
  if (j.is_string())
    return parse_rational(j.get<std::string>());
  if (j.is_number_integer())
    return Rational(j.get<long>());
  throw InvalidArgument("rational must be a \"p/q\" string or an integer");
}

inline Json to_json(const Mat &m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (const auto &q : m.row(i))
      row.push_back(to_json(q));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Mat mat_from_json(const Json &j, std::size_t cols) {
  if (!j.is_array())
    throw InvalidArgument("matrix must be an array of rows");
  std::vector<Vec> rows;
  for (const auto &row : j) {
    if (!row.is_array() || row.size() != cols)
      throw InvalidArgument("matrix row has length " +
                            std::to_string(row.is_array() ? row.size() : 0) +
                            ", expected " + std::to_string(cols));
    Vec v;
    for (const auto &q : row)
      v.push_back(rational_from_json(q));
    rows.push_back(std::move(v));
  }
  return Mat::from_rows(rows, cols);
}

inline Json to_json(const BinaryForm &f) {
  Json coeffs = Json::array();
  for (const auto &q : f.coeffs)
    coeffs.push_back(to_json(q));
  return {{"degree", f.degree}, {"coeffs", coeffs}};
}

inline BinaryForm form_from_json(const Json &j) {
  const int d = detail::json_int(j, "degree");
  if (d < 0)
    throw InvalidArgument("degree must be >= 0");
  if (!j.contains("coeffs") || !j.at("coeffs").is_array())
    throw InvalidArgument("missing 'coeffs' array");
  Vec c;
  for (const auto &q : j.at("coeffs"))
    c.push_back(rational_from_json(q));
  return {d, std::move(c)};
}

inline Json to_json(const FormSubspace &t) {
  return {{"degree", t.degree}, {"basis", to_json(t.space.basis())}};
}

/// Any spanning set is accepted; the result is canonicalized.
inline FormSubspace subspace_from_json(const Json &j) {
  const int d = detail::json_int(j, "degree");
  if (d < 0)
    throw InvalidArgument("degree must be >= 0");
  if (!j.contains("basis"))
    throw InvalidArgument("missing 'basis' array");
  return {d, Subspace::span(
                 mat_from_json(j.at("basis"), static_cast<std::size_t>(d) + 1))};
}

inline Json to_json(const NumericalType &t) {
  return {{"a", t.a}, {"bs", t.bs}};
}

inline NumericalType type_from_json(const Json &j) {
  return detail::json_guard("numerical type", [&] {
    NumericalType t{detail::json_int(j, "a"),
                    j.at("bs").get<std::vector<int>>()};
    if (!t.well_formed())
      throw InvalidArgument("numerical type must have a >= -1 and sorted "
                            "b_1 >= ... >= b_r >= 0");
    return t;
  });
}

inline Json to_json(const Decomposition &dec) {
  Json fs = Json::array();
  for (const auto &f : dec.fs)
    fs.push_back(to_json(f));
  return {{"S", to_json(dec.s)}, {"fs", fs}, {"type", to_json(dec.type)}};
}

inline Json to_json(const SplittingType &st) { return st.twists; }

inline Json to_json(const CurveMap &c) {
  Json comps = Json::array();
  for (const auto &g : c.components)
    comps.push_back(to_json(g));
  return {{"d", c.d},
          {"s", c.s},
          {"components", comps},
          {"vertex", to_json(c.vertex)}};
}

inline Json to_json(const StratumReport &r) {
  return {{"tau", to_json(r.tau)}, {"d", r.d},
          {"e", r.e},              {"dim_G", r.dim_G},
          {"dim_VT", r.dim_VT},    {"is_generic", r.is_generic},
          {"codim", r.codim}};
}

/// "h" lists h_1, h_2, ..., h_kmax.
inline Json to_json(const CohomologyProfile &p) {
  return {{"d", p.d}, {"e", p.e}, {"h", p.h}};
}

} // namespace binform
