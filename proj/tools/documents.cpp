#include "documents.hpp"

#include <fstream>
#include <sstream>

namespace threeterm::cli {

namespace {

[[noreturn]] void fail(const std::string& what) { throw parse_error(what); }

double number(const json& v, const std::string& where) {
  if (!v.is_number()) fail(where + ": expected a number");
  return v.get<double>();
}

std::complex<double> scalar(const json& v, const std::string& where, bool* is_cplx) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
    if (is_cplx) *is_cplx = true;
    return {v[0].get<double>(), v[1].get<double>()};
  }
  fail(where + ": expected a number or a [re, im] pair");
}

const json& member(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) fail(where + ": missing \"" + key + "\"");
  return obj.at(key);
}

template <std::size_t N>
std::array<double, N> number_array(const json& v, const std::string& where) {
  if (!v.is_array() || v.size() != N) {
    fail(where + ": expected an array of " + std::to_string(N) + " numbers");
  }
  std::array<double, N> out{};
  for (std::size_t k = 0; k < N; ++k) out[k] = number(v[k], where + "[" + std::to_string(k) + "]");
  return out;
}

}  // namespace

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    fail(path + ": " + e.what());
  }
}

ConfigDocument parse_config(const json& doc) {
  if (!doc.is_object()) fail("config: expected a JSON object");
  const int kinds = static_cast<int>(doc.contains("concyclic")) +
                    static_cast<int>(doc.contains("lightcone")) +
                    static_cast<int>(doc.contains("matrix"));
  if (kinds != 1) {
    fail("config: exactly one of \"concyclic\", \"lightcone\", \"matrix\" must be present");
  }
  if (doc.contains("concyclic")) {
    const json& c = doc["concyclic"];
    return ConcyclicPayload{number_array<4>(member(c, "alpha", "concyclic"), "concyclic.alpha"),
                            number_array<4>(member(c, "radii", "concyclic"), "concyclic.radii")};
  }
  if (doc.contains("lightcone")) {
    const json& u = member(doc["lightcone"], "u", "lightcone");
    if (!u.is_array() || u.size() != 4) fail("lightcone.u: expected four [x, y, z] triples");
    LightconePayload p;
    for (std::size_t k = 0; k < 4; ++k) {
      const auto v = number_array<3>(u[k], "lightcone.u[" + std::to_string(k) + "]");
      p.u[k] = {v[0], v[1], v[2]};
    }
    return p;
  }
  const json& m = doc["matrix"];
  const json& rows = member(m, "rows", "matrix");
  MatrixPayload p;
  if (m.contains("field")) {
    const json& f = m["field"];
    if (!f.is_string() || (f != "real" && f != "complex")) {
      fail("matrix.field: expected \"real\" or \"complex\"");
    }
    p.complex_field = f == "complex";
  }
  if (!rows.is_array() || rows.size() != 2) fail("matrix.rows: expected two rows");
  bool saw_complex = false;
  for (std::size_t r = 0; r < 2; ++r) {
    if (!rows[r].is_array() || rows[r].size() != 4) fail("matrix.rows: each row needs 4 entries");
    for (std::size_t k = 0; k < 4; ++k) {
      p.m.rows[r][k] = scalar(rows[r][k],
                              "matrix.rows[" + std::to_string(r) + "][" + std::to_string(k) + "]",
                              &saw_complex);
    }
  }
  if (saw_complex && !p.complex_field) {
    fail("matrix: complex entries require \"field\": \"complex\"");
  }
  return p;
}

ConcyclicConfig to_concyclic(const ConfigDocument& doc) {
  if (const auto* c = std::get_if<ConcyclicPayload>(&doc)) {
    return ConcyclicConfig(c->alpha, c->radii);
  }
  if (const auto* l = std::get_if<LightconePayload>(&doc)) {
    std::array<double, 4> alpha{};
    std::array<double, 4> radii{};
    for (std::size_t k = 0; k < 4; ++k) {
      try {
        const Horocycle h{LightConePoint(l->u[k])};
        alpha[k] = h.center().theta() / 2;
        radii[k] = horocycle_to_circle(h).radius;
      } catch (const domain_error& e) {
        throw configuration_error("lightcone.u[" + std::to_string(k) + "]: " + e.what());
      }
    }
    return ConcyclicConfig(alpha, radii);
  }
  fail("expected a \"concyclic\" or \"lightcone\" configuration");
}

TupleDocument parse_tuple(const json& doc) {
  const json* arr = &doc;
  if (doc.is_object()) {
    if (!doc.contains("minors")) fail("six-tuple: expected an array or {\"minors\": [...]}");
    arr = &doc["minors"];
  }
  if (!arr->is_array() || arr->size() != 6) {
    fail("six-tuple: expected 6 entries in the order 12, 13, 14, 23, 24, 34");
  }
  TupleDocument out;
  std::array<std::complex<double>, 6> v{};
  for (std::size_t k = 0; k < 6; ++k) {
    v[k] = scalar((*arr)[k], "six-tuple[" + std::to_string(k) + "]", &out.is_complex);
  }
  try {
    out.tuple = SixTuple<std::complex<double>>(v);
  } catch (const domain_error& e) {
    fail(std::string("six-tuple: ") + e.what());
  }
  return out;
}

std::array<ProjectivePoint<std::complex<double>>, 4> parse_points(const json& doc,
                                                                 bool* is_complex) {
  const json* arr = &doc;
  if (doc.is_object() && doc.contains("points")) arr = &doc["points"];
  if (!arr->is_array() || arr->size() != 4) fail("points: expected four [x, y] vectors");
  std::array<ProjectivePoint<std::complex<double>>, 4> out{};
  for (std::size_t k = 0; k < 4; ++k) {
    const json& p = (*arr)[k];
    const std::string where = "points[" + std::to_string(k) + "]";
    if (!p.is_array() || p.size() != 2) fail(where + ": expected [x, y]");
    out[k] = {scalar(p[0], where, is_complex), scalar(p[1], where, is_complex)};
  }
  return out;
}

json scalar_to_json(double v) { return v; }

json scalar_to_json(const std::complex<double>& v) { return json::array({v.real(), v.imag()}); }

SixTuple<double> real_part(const SixTuple<std::complex<double>>& t) {
  SixTuple<double> out;
  for (std::size_t k = 0; k < 6; ++k) out.values[k] = t.values[k].real();
  return out;
}

Matrix2x4<double> real_part(const Matrix2x4<std::complex<double>>& m) {
  Matrix2x4<double> out;
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t k = 0; k < 4; ++k) out.rows[r][k] = m.rows[r][k].real();
  }
  return out;
}

}  // namespace threeterm::cli
