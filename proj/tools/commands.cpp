#include "commands.hpp"

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "documents.hpp"

namespace threeterm::cli {

namespace {

constexpr double kDefaultTolerance = 1e-10;

using cplx = std::complex<double>;

std::string pair_name(std::size_t k) {
  return std::to_string(kPairs[k][0]) + std::to_string(kPairs[k][1]);
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

std::string fmt(const cplx& v) {
  if (v.imag() == 0) return fmt(v.real());
  return fmt(v.real()) + (v.imag() < 0 ? " - " : " + ") + fmt(std::abs(v.imag())) + "i";
}

void check_tolerance(double tol) {
  if (!(tol > 0)) throw parse_error("--tol must be positive");
}

// measure ------------------------------------------------------------------

struct Family {
  const char* name;
  const SixTuple<double>* tuple;
};

json measure_report(const ConcyclicConfig& cfg, double tol, bool* all_pass) {
  const MeasurementTable m = measure_all(cfg);
  const IdentityDeviations dev = identity_deviations(cfg, m);
  const std::array<Family, 4> families{
      {{"d", &m.d}, {"t", &m.t}, {"lambda", &m.lambda}, {"P", &m.P}}};

  json report;
  report["tolerance"] = tol;
  report["config"] = {{"alpha", cfg.alpha()}, {"radii", cfg.radii()}};
  json measurements = json::object();
  json residuals = json::object();
  json pass = json::object();
  bool ok = true;
  for (const auto& f : families) {
    measurements[f.name] = tuple_to_json(*f.tuple);
    const double r = relative_residual(*f.tuple);
    residuals[f.name] = r;
    pass[f.name] = r <= tol;
    ok = ok && r <= tol;
  }
  const std::array<std::pair<const char*, double>, 3> identities{
      {{"d_to_t", dev.d_to_t}, {"t_to_lambda", dev.t_to_lambda}, {"d_to_plucker", dev.d_to_plucker}}};
  json ident = json::object();
  for (const auto& [name, value] : identities) {
    ident[name] = value;
    pass[name] = value <= tol;
    ok = ok && value <= tol;
  }
  report["measurements"] = measurements;
  report["residuals"] = residuals;
  report["identities"] = ident;
  report["pass"] = pass;
  report["all_pass"] = ok;
  *all_pass = ok;
  return report;
}

void print_measure_table(const json& report, std::ostream& out) {
  out << "pair";
  for (const char* name : {"d", "t", "lambda", "P"}) out << std::setw(22) << name;
  out << "\n";
  for (std::size_t k = 0; k < 6; ++k) {
    out << std::setw(4) << pair_name(k);
    for (const char* name : {"d", "t", "lambda", "P"}) {
      out << std::setw(22) << fmt(report["measurements"][name][k].get<double>());
    }
    out << "\n";
  }
  out << "\nthree-term relation residuals (relative, tol " << fmt(report["tolerance"].get<double>())
      << ")\n";
  for (const char* name : {"d", "t", "lambda", "P"}) {
    out << "  " << std::setw(14) << std::left << name << std::right << std::setw(24)
        << fmt(report["residuals"][name].get<double>())
        << (report["pass"][name].get<bool>() ? "  pass" : "  FAIL") << "\n";
  }
  out << "rescaling identities (max relative deviation)\n";
  for (const char* name : {"d_to_t", "t_to_lambda", "d_to_plucker"}) {
    out << "  " << std::setw(14) << std::left << name << std::right << std::setw(24)
        << fmt(report["identities"][name].get<double>())
        << (report["pass"][name].get<bool>() ? "  pass" : "  FAIL") << "\n";
  }
}

int cmd_measure(const std::string& path, double tol, bool table, std::ostream& out) {
  check_tolerance(tol);
  const ConcyclicConfig cfg = to_concyclic(parse_config(read_json_file(path)));
  bool ok = false;
  const json report = measure_report(cfg, tol, &ok);
  if (table) {
    print_measure_table(report, out);
  } else {
    out << report.dump(2) << "\n";
  }
  return ok ? kOk : kRelationFailure;
}

// rescale ------------------------------------------------------------------

template <Scalar T>
SixTuple<T> narrow(const SixTuple<cplx>& t) {
  if constexpr (std::is_same_v<T, cplx>) {
    return t;
  } else {
    return real_part(t);
  }
}

template <Scalar T>
int solve_and_print(const SixTuple<T>& a, const SixTuple<T>& b, double tol, bool as_json,
                    std::ostream& out, std::ostream& err) {
  if (a.has_zero_entry() || b.has_zero_entry()) {
    throw degenerate_error("rescaling requires tuples of nonzero numbers");
  }
  TorusElement<T> q = TorusElement<T>::identity();
  try {
    q = rescaling_solve(a, b, tol);
  } catch (const not_same_orbit_error&) {
    err << "cross-ratio invariant of first tuple:  " << fmt(cplx(cross_ratio_invariant(a)))
        << "\ncross-ratio invariant of second tuple: " << fmt(cplx(cross_ratio_invariant(b)))
        << "\n";
    throw;
  }
  const RatioTuple<T> c(a, b);
  if (as_json) {
    json doc;
    json qs = json::array();
    for (const auto& v : q.values()) qs.push_back(scalar_to_json(v));
    doc["q"] = qs;
    doc["cross_ratio"] = scalar_to_json(cross_ratio_invariant(a));
    json rows = json::array();
    for (std::size_t k = 0; k < 6; ++k) {
      const auto [i, j] = kPairs[k];
      const T qq = q[i] * q[j];
      rows.push_back({{"pair", pair_name(k)},
                      {"q_i_q_j", scalar_to_json(qq)},
                      {"c_ij", scalar_to_json(c.c.values[k])},
                      {"relative_error", std::abs(qq - c.c.values[k]) / std::abs(c.c.values[k])}});
    }
    doc["verification"] = rows;
    out << doc.dump(2) << "\n";
    return kOk;
  }
  for (int i = 1; i <= 4; ++i) out << "q" << i << " = " << fmt(cplx(q[i])) << "\n";
  out << "(unique up to a global sign)\n\npair  q_i*q_j                    c_ij = b_ij/a_ij           rel. error\n";
  for (std::size_t k = 0; k < 6; ++k) {
    const auto [i, j] = kPairs[k];
    const T qq = q[i] * q[j];
    out << std::left << std::setw(6) << pair_name(k) << std::setw(27) << fmt(cplx(qq))
        << std::setw(27) << fmt(cplx(c.c.values[k])) << std::right
        << fmt(std::abs(qq - c.c.values[k]) / std::abs(c.c.values[k])) << "\n";
  }
  return kOk;
}

int cmd_rescale(const std::string& path_a, const std::string& path_b, double tol, bool as_json,
                std::ostream& out, std::ostream& err) {
  check_tolerance(tol);
  const TupleDocument a = parse_tuple(read_json_file(path_a));
  const TupleDocument b = parse_tuple(read_json_file(path_b));
  if (a.is_complex || b.is_complex) {
    return solve_and_print<cplx>(a.tuple, b.tuple, tol, as_json, out, err);
  }
  return solve_and_print<double>(narrow<double>(a.tuple), narrow<double>(b.tuple), tol, as_json,
                                 out, err);
}

// plucker ------------------------------------------------------------------

template <Scalar T>
json minors_document(const Matrix2x4<T>& m) {
  const auto p = minors(m);
  json doc;
  doc["minors"] = tuple_to_json(p);
  doc["residual"] = std::abs(residual(p));
  doc["relative_residual"] = relative_residual(p);
  return doc;
}

int cmd_plucker_minors(const std::string& path, std::ostream& out) {
  const ConfigDocument doc = parse_config(read_json_file(path));
  const auto* m = std::get_if<MatrixPayload>(&doc);
  if (!m) throw parse_error("plucker minors expects a \"matrix\" document");
  const json result = m->complex_field ? minors_document(m->m) : minors_document(real_part(m->m));
  out << result.dump(2) << "\n";
  return kOk;
}

double minor_roundtrip_error(const SixTuple<cplx>& p, const SixTuple<cplx>& back) {
  double scale = 0;
  double worst = 0;
  for (std::size_t k = 0; k < 6; ++k) {
    scale = std::max(scale, std::abs(p.values[k]));
    worst = std::max(worst, std::abs(p.values[k] - back.values[k]));
  }
  return scale > 0 ? worst / scale : worst;
}

template <Scalar T>
json reconstruct_document(const SixTuple<T>& p, double tol) {
  const Matrix2x4<T> m = reconstruct(p, tol);
  const SixTuple<T> back = minors(m);
  json doc = matrix_to_json(m);
  doc["minors"] = tuple_to_json(back);
  SixTuple<cplx> pc, bc;
  for (std::size_t k = 0; k < 6; ++k) {
    pc.values[k] = p.values[k];
    bc.values[k] = back.values[k];
  }
  doc["roundtrip_error"] = minor_roundtrip_error(pc, bc);
  return doc;
}

int cmd_plucker_reconstruct(const std::string& path, double tol, std::ostream& out,
                            std::ostream& err) {
  check_tolerance(tol);
  const TupleDocument t = parse_tuple(read_json_file(path));
  try {
    const json doc = t.is_complex ? reconstruct_document(t.tuple, tol)
                                  : reconstruct_document(real_part(t.tuple), tol);
    out << doc.dump(2) << "\n";
  } catch (const precondition_error& e) {
    err << "residual: " << fmt(std::abs(residual(t.tuple)))
        << " (relative " << fmt(e.residual()) << ", tolerance " << fmt(tol) << ")\n";
    throw;
  }
  return kOk;
}

// render, crossratio -------------------------------------------------------

int cmd_render(const std::string& path, const std::string& out_path, std::ostream& out) {
  const ConcyclicConfig cfg = to_concyclic(parse_config(read_json_file(path)));
  const std::string svg = render::render_svg(cfg);
  if (out_path.empty() || out_path == "-") {
    out << svg;
    return kOk;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw parse_error("cannot write " + out_path);
  file << svg;
  return kOk;
}

int cmd_crossratio(const std::string& path, bool as_json, std::ostream& out) {
  bool is_cplx = false;
  const auto pts = parse_points(read_json_file(path), &is_cplx);
  const cplx cr = cross_ratio_points(pts[0], pts[1], pts[2], pts[3]);
  const json value = is_cplx ? scalar_to_json(cr) : scalar_to_json(cr.real());
  if (as_json) {
    out << json{{"cross_ratio", value}}.dump(2) << "\n";
  } else {
    out << value.dump() << "\n";
  }
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Three-term relations: Ptolemy, Casey, lambda lengths and Plucker minors",
               "threeterm"};
  app.require_subcommand(1);

  double tol = kDefaultTolerance;
  bool as_json = false;
  bool as_table = false;
  std::string file_a, file_b, out_path;

  auto* measure = app.add_subcommand("measure", "Measure d, t, lambda, P and check all relations");
  measure->add_option("config", file_a, "Configuration document (concyclic or lightcone)")->required();
  measure->add_option("--tol", tol, "Relative tolerance");
  auto* json_flag = measure->add_flag("--json", as_json, "JSON report (default)");
  measure->add_flag("--table", as_table, "Human-readable table")->excludes(json_flag);

  auto* rescale = app.add_subcommand("rescale", "Find q with b_ij = q_i q_j a_ij");
  rescale->add_option("a", file_a, "First six-tuple document")->required();
  rescale->add_option("b", file_b, "Second six-tuple document")->required();
  rescale->add_option("--tol", tol, "Relative tolerance");
  rescale->add_flag("--json", as_json, "JSON output");

  auto* plucker = app.add_subcommand("plucker", "Plucker coordinates of 2x4 matrices");
  plucker->require_subcommand(1);
  auto* pminors = plucker->add_subcommand("minors", "Minors of a matrix document");
  pminors->add_option("file", file_a, "Matrix document")->required();
  auto* precon = plucker->add_subcommand("reconstruct", "Matrix with the given minors");
  precon->add_option("file", file_a, "Six-tuple document")->required();
  precon->add_option("--tol", tol, "Relative tolerance for the quadric check");

  auto* rend = app.add_subcommand("render", "Draw a configuration as SVG");
  rend->add_option("config", file_a, "Configuration document")->required();
  rend->add_option("--out", out_path, "Output file (default: stdout)");

  auto* cross = app.add_subcommand("crossratio", "Cross-ratio of four projective points");
  cross->add_option("file", file_a, "Points document")->required();
  cross->add_flag("--json", as_json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }

  try {
    if (*measure) return cmd_measure(file_a, tol, as_table, out);
    if (*rescale) return cmd_rescale(file_a, file_b, tol, as_json, out, err);
    if (*pminors) return cmd_plucker_minors(file_a, out);
    if (*precon) return cmd_plucker_reconstruct(file_a, tol, out, err);
    if (*rend) return cmd_render(file_a, out_path, out);
    if (*cross) return cmd_crossratio(file_a, as_json, out);
  } catch (const parse_error& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const not_same_orbit_error& e) {
    err << "not in the same torus orbit: " << e.what() << "\n";
    return kOrbitMismatch;
  } catch (const precondition_error& e) {
    err << "off the quadric: " << e.what() << "\n";
    return kOrbitMismatch;
  } catch (const index_error& e) {
    err << "invalid index: " << e.what() << "\n";
    return kParseError;
  } catch (const error& e) {
    err << "invalid input: " << e.what() << "\n";
    return kInvalidInput;
  }
  return kParseError;
}

}  // namespace threeterm::cli
