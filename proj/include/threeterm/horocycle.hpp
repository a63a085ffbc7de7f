#pragma once

// Horocycles as points of the positive light cone. u corresponds to
// h(u) = {v in H : <u, v> = -1/sqrt(2)}, which appears in the Poincare disk as
// a Euclidean circle of radius 1/(1 + z sqrt(2)) internally tangent to the
// unit circle.

#include <array>
#include <cmath>
#include <numbers>

#include "errors.hpp"
#include "hyperbolic.hpp"

namespace threeterm {

// A pairing below this multiple of z1*z2 means the two light-cone points lie
// on a common ray.
inline constexpr double kCommonRayTolerance = 1e-12;

class Horocycle {
 public:
  explicit Horocycle(const LightConePoint& u) : u_(u) {}

  const LightConePoint& lightcone() const { return u_; }
  const MinkowskiVec& vec() const { return u_.vec(); }
  BoundaryPoint center() const { return lightcone_to_boundary(u_); }

 private:
  LightConePoint u_;
};

struct EuclideanCircle {
  std::array<double, 2> center{};
  double radius = 0;
};

/// lambda = sqrt(-<u1,u2>) together with the signed distance delta = 2 log lambda
/// between the horocycles (positive iff they are disjoint).
struct LambdaLength {
  double value = 0;
  double delta = 0;
};

inline EuclideanCircle horocycle_to_circle(const Horocycle& h) {
  const auto& u = h.vec();
  const double r = 1.0 / (1.0 + u.z * std::numbers::sqrt2);
  const double rho = std::hypot(u.x, u.y);
  return {{(1.0 - r) * u.x / rho, (1.0 - r) * u.y / rho}, r};
}

// Inverse of horocycle_to_circle: solves 1/(1 + z sqrt 2) = r for z.
inline Horocycle horocycle_from_tangency(const BoundaryPoint& tangency, double r) {
  if (!(r > 0 && r < 1)) throw domain_error("horocycle radius must lie in (0, 1)");
  const double z = (1.0 / r - 1.0) / std::numbers::sqrt2;
  return Horocycle(LightConePoint({z * tangency.x(), z * tangency.y(), z}));
}

inline LambdaLength lambda_length(const Horocycle& h1, const Horocycle& h2) {
  // On the cone -<u1, u2> = |z2 p1 - z1 p2|^2 / (2 z1 z2), p the spatial part.
  // Same value as the pairing without the cancellation for nearby centres.
  const auto& u = h1.vec();
  const auto& v = h2.vec();
  const double dx = v.z * u.x - u.z * v.x;
  const double dy = v.z * u.y - u.z * v.y;
  const double neg_pairing = (dx * dx + dy * dy) / (2.0 * u.z * v.z);
  if (neg_pairing <= kCommonRayTolerance * u.z * v.z) {
    throw degenerate_error("horocycles lie on a common ray of the light cone");
  }
  const double value = std::sqrt(neg_pairing);
  return {value, 2.0 * std::log(value)};
}

}  // namespace threeterm
