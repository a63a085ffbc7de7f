#pragma once

// Static SVG picture of a four-circle configuration: the unit circle, the
// tangent circles H_i, the chords A_iA_j, the exterior bitangents, and the
// hyperbolic geodesics between tangency points.
//
// The unit circle is inscribed in a 1000 x 1000 box: (x, y) -> (500 + 500x,
// 500 - 500y). Output depends only on the configuration.

#include <array>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "measurements.hpp"

namespace threeterm::render {

using Vec2 = std::array<double, 2>;

struct Segment {
  int i = 0;
  int j = 0;
  Vec2 from{};
  Vec2 to{};
};

// Geodesic between two ideal points: an arc of the circle orthogonal to S, or
// a diameter when the points are antipodal.
struct GeodesicArc {
  int i = 0;
  int j = 0;
  Vec2 from{};
  Vec2 to{};
  bool straight = false;
  Vec2 center{};
  double radius = 0;
  bool counterclockwise = false;  // direction of travel around `center`
};

struct Scene {
  std::array<Vec2, 4> tangency{};
  std::array<Vec2, 4> centers{};
  std::array<double, 4> radii{};
  std::vector<Segment> chords;
  std::vector<Segment> bitangents;
  std::vector<GeodesicArc> geodesics;
};

inline Vec2 operator-(const Vec2& a, const Vec2& b) { return {a[0] - b[0], a[1] - b[1]}; }
inline Vec2 operator+(const Vec2& a, const Vec2& b) { return {a[0] + b[0], a[1] + b[1]}; }
inline Vec2 operator*(double s, const Vec2& a) { return {s * a[0], s * a[1]}; }
inline double dot(const Vec2& a, const Vec2& b) { return a[0] * b[0] + a[1] * b[1]; }
inline double cross(const Vec2& a, const Vec2& b) { return a[0] * b[1] - a[1] * b[0]; }
inline double norm(const Vec2& a) { return std::hypot(a[0], a[1]); }

/// Exterior common tangent of two disjoint circles. Of the two, the one whose
/// touching points face the origin is returned.
inline Segment exterior_bitangent(const Vec2& c1, double r1, const Vec2& c2, double r2) {
  const Vec2 delta = c2 - c1;
  const double dist = norm(delta);
  const Vec2 u = (1.0 / dist) * delta;
  const Vec2 perp{-u[1], u[0]};
  // Unit normal n of the tangent line with n.c1 - r1 = n.c2 - r2.
  const double along = (r2 - r1) / dist;
  const double across = std::sqrt(std::max(0.0, 1.0 - along * along));
  Vec2 n = along * u + across * perp;
  if (dot(n, c1 + c2) < 0) n = along * u + (-across) * perp;
  return {0, 0, c1 - r1 * n, c2 - r2 * n};
}

inline GeodesicArc geodesic_arc(const Vec2& a, const Vec2& b) {
  GeodesicArc g;
  g.from = a;
  g.to = b;
  const double c = dot(a, b);
  if (std::abs(cross(a, b)) < 1e-12 && c < 0) {
    g.straight = true;
    return g;
  }
  g.center = (1.0 / (1.0 + c)) * (a + b);
  g.radius = std::sqrt(std::max(0.0, dot(g.center, g.center) - 1.0));
  // The arc inside the disk is the short one; it turns toward the origin.
  g.counterclockwise = cross(a - g.center, b - g.center) > 0;
  return g;
}

inline Scene build_scene(const ConcyclicConfig& cfg) {
  Scene s;
  for (int i = 1; i <= 4; ++i) {
    s.tangency[i - 1] = cfg.tangency(i);
    s.centers[i - 1] = cfg.center(i);
    s.radii[i - 1] = cfg.radius(i);
  }
  for (const auto& [i, j] : kPairs) {
    s.chords.push_back({i, j, s.tangency[i - 1], s.tangency[j - 1]});
    auto t = exterior_bitangent(s.centers[i - 1], s.radii[i - 1], s.centers[j - 1], s.radii[j - 1]);
    t.i = i;
    t.j = j;
    s.bitangents.push_back(t);
    auto g = geodesic_arc(s.tangency[i - 1], s.tangency[j - 1]);
    g.i = i;
    g.j = j;
    s.geodesics.push_back(g);
  }
  return s;
}

namespace detail {

inline constexpr double kHalfSize = 500.0;

inline std::string num(double v) {
  if (std::abs(v) < 5e-4) v = 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

inline std::string px(const Vec2& p) { return num(kHalfSize + kHalfSize * p[0]); }
inline std::string py(const Vec2& p) { return num(kHalfSize - kHalfSize * p[1]); }

inline std::string label(char sym, int i, int j) {
  return std::string(1, sym) + std::to_string(i) + std::to_string(j);
}

}  // namespace detail

inline std::string to_svg(const Scene& s) {
  using detail::num;
  using detail::px;
  using detail::py;
  const double k = detail::kHalfSize;
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out +=
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"1000\" height=\"1000\" "
      "viewBox=\"-40 -40 1080 1080\">\n";
  out += "<g fill=\"none\" stroke-linecap=\"round\">\n";
  out += "<circle class=\"boundary\" cx=\"500.000\" cy=\"500.000\" r=\"500.000\" "
         "stroke=\"black\" stroke-width=\"2\"/>\n";
  for (int i = 0; i < 4; ++i) {
    out += "<circle class=\"horocycle\" id=\"H" + std::to_string(i + 1) + "\" cx=\"" +
           px(s.centers[i]) + "\" cy=\"" + py(s.centers[i]) + "\" r=\"" + num(k * s.radii[i]) +
           "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
  }
  for (const auto& g : s.geodesics) {
    out += "<path class=\"geodesic\" id=\"" + detail::label('g', g.i, g.j) + "\" d=\"M " +
           px(g.from) + " " + py(g.from);
    if (g.straight) {
      out += " L " + px(g.to) + " " + py(g.to);
    } else {
      // SVG's y axis points down: a counterclockwise turn has sweep flag 0.
      const std::string r = num(k * g.radius);
      out += " A " + r + " " + r + " 0 0 " + (g.counterclockwise ? "0" : "1") + " " + px(g.to) +
             " " + py(g.to);
    }
    out += "\" stroke=\"sienna\" stroke-width=\"1\"/>\n";
  }
  for (const auto& c : s.chords) {
    out += "<line class=\"chord\" id=\"" + detail::label('d', c.i, c.j) + "\" x1=\"" +
           px(c.from) + "\" y1=\"" + py(c.from) + "\" x2=\"" + px(c.to) + "\" y2=\"" + py(c.to) +
           "\" stroke=\"darkcyan\" stroke-width=\"2\"/>\n";
  }
  for (const auto& b : s.bitangents) {
    out += "<line class=\"bitangent\" id=\"" + detail::label('t', b.i, b.j) + "\" x1=\"" +
           px(b.from) + "\" y1=\"" + py(b.from) + "\" x2=\"" + px(b.to) + "\" y2=\"" + py(b.to) +
           "\" stroke=\"purple\" stroke-width=\"2\"/>\n";
  }
  out += "</g>\n<g font-family=\"serif\" font-size=\"18\" text-anchor=\"middle\">\n";
  for (const auto& c : s.chords) {
    const Vec2 mid = 0.5 * (c.from + c.to);
    out += "<text x=\"" + px(mid) + "\" y=\"" + py(mid) + "\" fill=\"darkcyan\">" +
           detail::label('d', c.i, c.j) + "</text>\n";
  }
  for (const auto& b : s.bitangents) {
    const Vec2 mid = 0.5 * (b.from + b.to);
    out += "<text x=\"" + px(mid) + "\" y=\"" + py(mid) + "\" fill=\"purple\">" +
           detail::label('t', b.i, b.j) + "</text>\n";
  }
  for (int i = 0; i < 4; ++i) {
    const Vec2 p = 1.04 * s.tangency[i];
    out += "<text x=\"" + px(p) + "\" y=\"" + py(p) + "\">A" + std::to_string(i + 1) +
           "</text>\n";
  }
  out += "</g>\n</svg>\n";
  return out;
}

inline std::string render_svg(const ConcyclicConfig& cfg) { return to_svg(build_scene(cfg)); }

}  // namespace threeterm::render
