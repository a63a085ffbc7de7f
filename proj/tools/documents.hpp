#pragma once

// JSON documents read and written by the threeterm command-line tool.
//
//   config:   {"concyclic": {"alpha": [4], "radii": [4]}}
//             {"lightcone": {"u": [[x,y,z] x 4]}}
//             {"matrix": {"rows": [[4],[4]], "field": "real" | "complex"}}
//   six-tuple: [a12, a13, a14, a23, a24, a34]  (or {"minors": [...]})
//   points:   [[x1,y1], [x2,y2], [x3,y3], [x4,y4]]
//
// Complex scalars are [re, im] pairs; plain numbers are real.

#include <array>
#include <complex>
#include <string>
#include <variant>

#include <json.hpp>

#include "threeterm/threeterm.hpp"

namespace threeterm::cli {

using json = nlohmann::ordered_json;

// Malformed or mistyped input document.
class parse_error : public error {
 public:
  using error::error;
};

json read_json_file(const std::string& path);

struct ConcyclicPayload {
  std::array<double, 4> alpha{};
  std::array<double, 4> radii{};
};

struct LightconePayload {
  std::array<MinkowskiVec, 4> u{};
};

struct MatrixPayload {
  bool complex_field = false;
  Matrix2x4<std::complex<double>> m;
};

using ConfigDocument = std::variant<ConcyclicPayload, LightconePayload, MatrixPayload>;

ConfigDocument parse_config(const json& doc);

// Configuration of circles from a concyclic or light-cone document. Throws
// parse_error for a matrix document.
ConcyclicConfig to_concyclic(const ConfigDocument& doc);

// Tuple entries as complex numbers; `is_complex` reports whether any entry
// was given as a [re, im] pair.
struct TupleDocument {
  SixTuple<std::complex<double>> tuple;
  bool is_complex = false;
};

TupleDocument parse_tuple(const json& doc);

std::array<ProjectivePoint<std::complex<double>>, 4> parse_points(const json& doc,
                                                                 bool* is_complex = nullptr);

json scalar_to_json(double v);
json scalar_to_json(const std::complex<double>& v);

template <Scalar T>
json tuple_to_json(const SixTuple<T>& t) {
  json out = json::array();
  for (const auto& v : t.values) out.push_back(scalar_to_json(v));
  return out;
}

template <Scalar T>
json matrix_to_json(const Matrix2x4<T>& m) {
  json rows = json::array();
  for (const auto& row : m.rows) {
    json r = json::array();
    for (const auto& v : row) r.push_back(scalar_to_json(v));
    rows.push_back(r);
  }
  return {{"matrix", {{"rows", rows}, {"field", is_complex<T>::value ? "complex" : "real"}}}};
}

SixTuple<double> real_part(const SixTuple<std::complex<double>>& t);
Matrix2x4<double> real_part(const Matrix2x4<std::complex<double>>& m);

}  // namespace threeterm::cli
