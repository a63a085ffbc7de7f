#pragma once

// Minkowski 3-space and three models of the hyperbolic plane: the hyperboloid,
// the Poincare disk and the upper half plane, with the isometries between
// them and two independent routes to hyperbolic distance.

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <string>
#include <utility>

#include "errors.hpp"
#include "relations.hpp"

namespace threeterm {

using complex = std::complex<double>;

// Absolute tolerance for the hyperboloid and light-cone constraints, applied
// after dividing by the largest squared component (floored at 1).
inline constexpr double kModelTolerance = 1e-9;

struct MinkowskiVec {
  double x = 0;
  double y = 0;
  double z = 0;

  friend MinkowskiVec operator+(const MinkowskiVec& a, const MinkowskiVec& b) {
    return {a.x + b.x, a.y + b.y, a.z + b.z};
  }
  friend MinkowskiVec operator-(const MinkowskiVec& a, const MinkowskiVec& b) {
    return {a.x - b.x, a.y - b.y, a.z - b.z};
  }
  friend MinkowskiVec operator*(double s, const MinkowskiVec& a) {
    return {s * a.x, s * a.y, s * a.z};
  }
  friend bool operator==(const MinkowskiVec&, const MinkowskiVec&) = default;

  bool finite() const { return std::isfinite(x) && std::isfinite(y) && std::isfinite(z); }
  double max_abs() const { return std::max({std::abs(x), std::abs(y), std::abs(z)}); }
};

// Indefinite pairing xx' + yy' - zz'.
inline double mink_pair(const MinkowskiVec& u, const MinkowskiVec& v) {
  return u.x * v.x + u.y * v.y - u.z * v.z;
}

namespace detail {

inline double constraint_scale(const MinkowskiVec& v) {
  const double m = v.max_abs();
  return std::max(1.0, m * m);
}

inline double wrap_angle(double theta) {
  constexpr double two_pi = 2 * std::numbers::pi;
  double t = std::fmod(theta, two_pi);
  if (t < 0) t += two_pi;
  if (t >= two_pi) t = 0;
  return t;
}

}  // namespace detail

/// Point of the upper sheet <v,v> = -1, z > 0. Construction accepts vectors
/// within kModelTolerance of the sheet and snaps z back onto it.
class HyperboloidPoint {
 public:
  explicit HyperboloidPoint(const MinkowskiVec& v) : v_(v) {
    if (!v.finite()) throw domain_error("hyperboloid point must be finite");
    if (!(v.z > 0)) throw domain_error("hyperboloid point must have z > 0");
    const double defect = std::abs(mink_pair(v, v) + 1.0) / detail::constraint_scale(v);
    if (defect > kModelTolerance) {
      throw domain_error("vector is not on the hyperboloid <v,v> = -1");
    }
    v_.z = std::sqrt(1.0 + v.x * v.x + v.y * v.y);
  }

  static HyperboloidPoint apex() { return HyperboloidPoint({0, 0, 1}); }

  const MinkowskiVec& vec() const { return v_; }

 private:
  MinkowskiVec v_;
};

/// Point of the open positive light cone <u,u> = 0, z > 0.
class LightConePoint {
 public:
  explicit LightConePoint(const MinkowskiVec& u) : u_(u) {
    if (!u.finite()) throw domain_error("light-cone point must be finite");
    if (!(u.z > 0)) throw domain_error("light-cone point must have z > 0");
    const double defect = std::abs(mink_pair(u, u)) / detail::constraint_scale(u);
    if (defect > kModelTolerance) throw domain_error("vector is not on the light cone <u,u> = 0");
    u_.z = std::hypot(u.x, u.y);
    if (!(u_.z > 0)) throw domain_error("light-cone point must be nonzero");
  }

  const MinkowskiVec& vec() const { return u_; }

  LightConePoint scaled(double s) const {
    if (!(s > 0)) throw domain_error("light-cone rescaling factor must be positive");
    return LightConePoint(s * u_);
  }

 private:
  MinkowskiVec u_;
};

class DiskPoint {
 public:
  DiskPoint(double x, double y) : x_(x), y_(y) {
    if (!std::isfinite(x) || !std::isfinite(y) || !(x * x + y * y < 1.0)) {
      throw domain_error("disk point must lie in the open unit disk");
    }
  }

  double x() const { return x_; }
  double y() const { return y_; }
  complex as_complex() const { return {x_, y_}; }
  double norm_sq() const { return x_ * x_ + y_ * y_; }

 private:
  double x_;
  double y_;
};

/// Ideal point (cos theta, sin theta) of the disk, theta kept in [0, 2pi).
class BoundaryPoint {
 public:
  explicit BoundaryPoint(double theta) {
    if (!std::isfinite(theta)) throw domain_error("boundary angle must be finite");
    theta_ = detail::wrap_angle(theta);
  }

  double theta() const { return theta_; }
  double x() const { return std::cos(theta_); }
  double y() const { return std::sin(theta_); }

  friend bool operator==(const BoundaryPoint&, const BoundaryPoint&) = default;

 private:
  double theta_ = 0;
};

/// Point of the closed upper half plane: interior (im > 0), a real ideal
/// point, or the ideal point at infinity.
class UhpPoint {
 public:
  enum class Kind { interior, ideal, infinity };

  static UhpPoint interior(double re, double im) {
    if (!std::isfinite(re) || !std::isfinite(im) || !(im > 0)) {
      throw domain_error("interior upper-half-plane point needs finite re and im > 0");
    }
    return UhpPoint(Kind::interior, re, im);
  }
  static UhpPoint interior(complex w) { return interior(w.real(), w.imag()); }
  static UhpPoint ideal(double x) {
    if (!std::isfinite(x)) throw domain_error("finite ideal point must be finite");
    return UhpPoint(Kind::ideal, x, 0);
  }
  static UhpPoint infinity() { return UhpPoint(Kind::infinity, 0, 0); }

  Kind kind() const { return kind_; }
  bool is_ideal() const { return kind_ != Kind::interior; }
  bool is_infinity() const { return kind_ == Kind::infinity; }
  double re() const { return re_; }
  double im() const { return im_; }
  complex as_complex() const {
    if (is_infinity()) throw domain_error("the point at infinity has no complex coordinate");
    return {re_, im_};
  }

  // Homogeneous coordinates on the projective line; infinity is (1, 0).
  ProjectivePoint<complex> projective() const {
    if (is_infinity()) return {complex(1), complex(0)};
    return {complex(re_, im_), complex(1)};
  }

  friend bool operator==(const UhpPoint&, const UhpPoint&) = default;

 private:
  UhpPoint(Kind k, double re, double im) : kind_(k), re_(re), im_(im) {}

  Kind kind_;
  double re_;
  double im_;
};

/// Geodesic recorded by its two ideal endpoints in one model.
template <typename Ideal>
struct Geodesic {
  Ideal first;
  Ideal second;

  Geodesic(Ideal a, Ideal b) : first(a), second(b) {
    if (a == b) throw degenerate_error("geodesic endpoints must be distinct");
  }

  Geodesic reversed() const { return Geodesic(second, first); }
};

inline HyperboloidPoint disk_to_hyperboloid(const DiskPoint& p) {
  const double s = p.norm_sq();
  const double k = 1.0 / (1.0 - s);
  return HyperboloidPoint({2 * p.x() * k, 2 * p.y() * k, (1.0 + s) * k});
}

inline DiskPoint hyperboloid_to_disk(const HyperboloidPoint& v) {
  const auto& u = v.vec();
  return DiskPoint(u.x / (1.0 + u.z), u.y / (1.0 + u.z));
}

inline BoundaryPoint lightcone_to_boundary(const LightConePoint& u) {
  return BoundaryPoint(std::atan2(u.vec().y, u.vec().x));
}

inline DiskPoint cayley_uhp_to_disk(const UhpPoint& w) {
  if (w.is_ideal()) throw domain_error("ideal point maps to the boundary; use cayley_uhp_to_boundary");
  const complex z = w.as_complex();
  const complex p = (z - complex(0, 1)) / (z + complex(0, 1));
  return DiskPoint(p.real(), p.imag());
}

// Ideal points x -> (x - i)/(x + i) on the unit circle; infinity -> 1.
inline BoundaryPoint cayley_uhp_to_boundary(const UhpPoint& w) {
  if (!w.is_ideal()) throw domain_error("interior point maps into the disk; use cayley_uhp_to_disk");
  if (w.is_infinity()) return BoundaryPoint(0.0);
  const double x = w.re();
  return BoundaryPoint(std::atan2(-2 * x, x * x - 1));
}

inline UhpPoint cayley_disk_to_uhp(const DiskPoint& p) {
  const complex w = p.as_complex();
  const complex z = complex(0, 1) * (1.0 + w) / (1.0 - w);
  // Interior points stay interior; guard against underflow of Im z.
  return UhpPoint::interior(z.real(), std::max(z.imag(), std::numeric_limits<double>::min()));
}

// e^{i theta} -> -cot(theta / 2); theta = 0 is the point at infinity.
inline UhpPoint cayley_boundary_to_uhp(const BoundaryPoint& b) {
  if (b.theta() == 0) return UhpPoint::infinity();
  const double half = b.theta() / 2;
  return UhpPoint::ideal(-std::cos(half) / std::sin(half));
}

inline HyperboloidPoint uhp_to_hyperboloid(const UhpPoint& w) {
  return disk_to_hyperboloid(cayley_uhp_to_disk(w));
}

/// Ideal endpoints (W1', W2') of the geodesic through interior points w1 and
/// w2, ordered so that the geodesic reads W1', w1, w2, W2'.
inline Geodesic<UhpPoint> geodesic_ideal_endpoints(const UhpPoint& w1, const UhpPoint& w2) {
  if (w1.is_ideal() || w2.is_ideal()) throw domain_error("geodesic endpoints need interior points");
  if (w1 == w2) throw domain_error("geodesic through coincident points is undefined");

  const double x1 = w1.re(), y1 = w1.im();
  const double x2 = w2.re(), y2 = w2.im();
  if (x1 == x2) {
    const auto foot = UhpPoint::ideal(x1);
    return y1 < y2 ? Geodesic<UhpPoint>(foot, UhpPoint::infinity())
                   : Geodesic<UhpPoint>(UhpPoint::infinity(), foot);
  }

  // Semicircle centred on the real axis; its feet are the roots of
  // e^2 - 2ce + (2 x1 c - |w1|^2) = 0, taken in the cancellation-free order.
  const double c = 0.5 * (x1 + x2) + 0.5 * (y2 - y1) * (y2 + y1) / (x2 - x1);
  const double radius = std::hypot(x1 - c, y1);
  const double big = c >= 0 ? c + radius : c - radius;
  const double small = (2 * x1 * c - x1 * x1 - y1 * y1) / big;
  const double lo = std::min(big, small);
  const double hi = std::max(big, small);
  return x1 < x2 ? Geodesic<UhpPoint>(UhpPoint::ideal(lo), UhpPoint::ideal(hi))
                 : Geodesic<UhpPoint>(UhpPoint::ideal(hi), UhpPoint::ideal(lo));
}

/// Hyperbolic distance as |log| of the cross-ratio [W1, W1', W2, W2'].
inline double hyp_distance_crossratio(const UhpPoint& w1, const UhpPoint& w2) {
  const auto ends = geodesic_ideal_endpoints(w1, w2);
  const complex cr = cross_ratio_points(w1.projective(), ends.first.projective(),
                                        w2.projective(), ends.second.projective());
  return std::abs(std::log(std::abs(cr)));
}

/// arccosh(-<v1, v2>), evaluated as 2 asinh(|v1 - v2| / 2) where |.| is the
/// Minkowski norm of the (spacelike) difference.
inline double hyp_distance_hyperboloid(const HyperboloidPoint& v1, const HyperboloidPoint& v2) {
  const auto& a = v1.vec();
  const auto& b = v2.vec();
  const double scale = std::max(detail::constraint_scale(a), detail::constraint_scale(b));
  if (-mink_pair(a, b) < 1.0 - kModelTolerance * scale) {
    throw domain_error("pairing of hyperboloid points above -1; arccosh undefined");
  }
  const MinkowskiVec d = a - b;
  const double chord_sq = std::max(0.0, d.x * d.x + d.y * d.y - d.z * d.z);
  return 2 * std::asinh(0.5 * std::sqrt(chord_sq));
}

}  // namespace threeterm
