#pragma once

// Four circles H_1..H_4 inside the unit circle S, tangent to it at
// A_i = (cos 2a_i, sin 2a_i), and the four families of pairwise measurements
// they determine:
//
//   d_ij  chord |A_i A_j|                      = 2 sin(a_j - a_i)
//   t_ij  exterior bitangent of H_i, H_j       = sqrt(1-r_i) sqrt(1-r_j) d_ij
//   l_ij  lambda length of the horocycles H_i  with t_ij = l_ij sqrt(2r_i) sqrt(2r_j)
//   P_ij  det[cos a_i, cos a_j; sin a_i, sin a_j], d_ij = 2 P_ij
//
// Each family satisfies the three-term relation, and any two are related by a
// torus rescaling.

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "errors.hpp"
#include "horocycle.hpp"
#include "relations.hpp"

namespace threeterm {

// Required gap between circles: |C_i - C_j| > r_i + r_j + kDisjointMargin.
inline constexpr double kDisjointMargin = 1e-9;

class ConcyclicConfig {
 public:
  ConcyclicConfig(const std::array<double, 4>& alpha, const std::array<double, 4>& radii)
      : alpha_(alpha), r_(radii) {
    for (int i = 0; i < 4; ++i) {
      if (!std::isfinite(alpha_[i]) || alpha_[i] < 0 || alpha_[i] > std::numbers::pi) {
        throw configuration_error("alpha_" + std::to_string(i + 1) + " must lie in [0, pi]");
      }
      if (!(r_[i] > 0 && r_[i] < 1)) {
        throw configuration_error("radius r_" + std::to_string(i + 1) + " must lie in (0, 1)");
      }
    }
    for (int i = 0; i < 3; ++i) {
      if (!(alpha_[i] < alpha_[i + 1])) {
        throw configuration_error("tangency points must be strictly counterclockwise: alpha_" +
                                  std::to_string(i + 1) + " >= alpha_" + std::to_string(i + 2));
      }
    }
    for (const auto& [i, j] : kPairs) {
      const auto ci = center(i);
      const auto cj = center(j);
      const double gap = std::hypot(ci[0] - cj[0], ci[1] - cj[1]);
      if (!(gap > r_[i - 1] + r_[j - 1] + kDisjointMargin)) {
        throw configuration_error("circles H_" + std::to_string(i) + " and H_" +
                                  std::to_string(j) + " overlap");
      }
    }
  }

  const std::array<double, 4>& alpha() const { return alpha_; }
  const std::array<double, 4>& radii() const { return r_; }
  double alpha(int i) const { return alpha_.at(checked(i)); }
  double radius(int i) const { return r_.at(checked(i)); }

  // Tangency point A_i on the unit circle.
  std::array<double, 2> tangency(int i) const {
    const double a = 2 * alpha(i);
    return {std::cos(a), std::sin(a)};
  }

  std::array<double, 2> center(int i) const {
    const auto a = tangency(i);
    const double s = 1.0 - radius(i);
    return {s * a[0], s * a[1]};
  }

 private:
  static std::size_t checked(int i) {
    if (i < 1 || i > 4) throw index_error("circle index must be in 1..4");
    return static_cast<std::size_t>(i - 1);
  }

  std::array<double, 4> alpha_;
  std::array<double, 4> r_;
};

namespace detail {

inline void check_ordered_pair(int i, int j) {
  if (i < 1 || j > 4 || i >= j) {
    throw index_error("measurement needs 1 <= i < j <= 4, got (" + std::to_string(i) + "," +
                      std::to_string(j) + ")");
  }
}

}  // namespace detail

inline std::array<double, 2> euclidean_center(const ConcyclicConfig& cfg, int i) {
  return cfg.center(i);
}

inline double chord(const ConcyclicConfig& cfg, int i, int j) {
  detail::check_ordered_pair(i, j);
  return 2 * std::sin(cfg.alpha(j) - cfg.alpha(i));
}

inline double bitangent(const ConcyclicConfig& cfg, int i, int j) {
  detail::check_ordered_pair(i, j);
  return std::sqrt(1 - cfg.radius(i)) * std::sqrt(1 - cfg.radius(j)) * chord(cfg, i, j);
}

// Length sqrt(c^2 - (r_i - r_j)^2) of an exterior common tangent, read off the
// circle centres directly.
inline double exterior_tangent_length(const ConcyclicConfig& cfg, int i, int j) {
  detail::check_ordered_pair(i, j);
  const auto ci = cfg.center(i);
  const auto cj = cfg.center(j);
  const double dc = std::hypot(ci[0] - cj[0], ci[1] - cj[1]);
  const double dr = cfg.radius(i) - cfg.radius(j);
  return std::sqrt((dc - dr) * (dc + dr));
}

inline Horocycle config_horocycle(const ConcyclicConfig& cfg, int i) {
  return horocycle_from_tangency(BoundaryPoint(2 * cfg.alpha(i)), cfg.radius(i));
}

// Lambda length read off the bitangent: t_ij / (sqrt(2 r_i) sqrt(2 r_j)).
inline double lambda_measure(const ConcyclicConfig& cfg, int i, int j) {
  detail::check_ordered_pair(i, j);
  return bitangent(cfg, i, j) / (std::sqrt(2 * cfg.radius(i)) * std::sqrt(2 * cfg.radius(j)));
}

// Lambda length through the light cone: sqrt(-<u_i, u_j>).
inline double lambda_minkowski(const ConcyclicConfig& cfg, int i, int j) {
  detail::check_ordered_pair(i, j);
  return lambda_length(config_horocycle(cfg, i), config_horocycle(cfg, j)).value;
}

// Determinant of the unit columns (cos a, sin a); any i != j is accepted and
// P_ji = -P_ij.
inline double plucker_measure(const ConcyclicConfig& cfg, int i, int j) {
  if (i == j) throw index_error("plucker_measure needs i != j");
  const double ai = cfg.alpha(i);
  const double aj = cfg.alpha(j);
  return std::cos(ai) * std::sin(aj) - std::cos(aj) * std::sin(ai);
}

struct MeasurementTable {
  SixTuple<double> d;
  SixTuple<double> t;
  SixTuple<double> lambda;
  SixTuple<double> P;
};

/// Lambda lengths are taken from the light cone rather than from t, so the
/// t-lambda identity remains a genuine check on the table.
inline MeasurementTable measure_all(const ConcyclicConfig& cfg) {
  MeasurementTable m;
  for (std::size_t k = 0; k < 6; ++k) {
    const auto [i, j] = kPairs[k];
    m.d.values[k] = chord(cfg, i, j);
    m.t.values[k] = bitangent(cfg, i, j);
    m.lambda.values[k] = lambda_minkowski(cfg, i, j);
    m.P.values[k] = plucker_measure(cfg, i, j);
  }
  return m;
}

/// Largest entrywise relative deviation of each rescaling identity, each
/// measured against a route independent of the table entry it tests:
///   d_to_t       t_ij vs the exterior tangent length from the circle centres
///   t_to_lambda  t_ij vs lambda_ij sqrt(2 r_i) sqrt(2 r_j)
///   d_to_plucker |A_i - A_j| from coordinates vs 2 P_ij
struct IdentityDeviations {
  double d_to_t = 0;
  double t_to_lambda = 0;
  double d_to_plucker = 0;
};

inline IdentityDeviations identity_deviations(const ConcyclicConfig& cfg,
                                              const MeasurementTable& m) {
  IdentityDeviations dev;
  for (std::size_t k = 0; k < 6; ++k) {
    const auto [i, j] = kPairs[k];
    const double t = m.t.values[k];
    const double ri = cfg.radius(i);
    const double rj = cfg.radius(j);
    dev.d_to_t = std::max(dev.d_to_t, std::abs(t - exterior_tangent_length(cfg, i, j)) / t);
    const double t_from_lambda = m.lambda.values[k] * std::sqrt(2 * ri) * std::sqrt(2 * rj);
    dev.t_to_lambda = std::max(dev.t_to_lambda, std::abs(t - t_from_lambda) / t);
    const auto ai = cfg.tangency(i);
    const auto aj = cfg.tangency(j);
    const double d = std::hypot(ai[0] - aj[0], ai[1] - aj[1]);
    dev.d_to_plucker = std::max(dev.d_to_plucker, std::abs(d - 2 * m.P.values[k]) / d);
  }
  return dev;
}

// Torus elements that carry one measurement family onto another, as read off
// the rescaling identities: t = q.d, t = q.lambda, d = q.(2P).
inline TorusElement<double> torus_d_to_t(const ConcyclicConfig& cfg) {
  std::array<double, 4> q{};
  for (int i = 1; i <= 4; ++i) q[i - 1] = std::sqrt(1 - cfg.radius(i));
  return TorusElement<double>(q);
}

inline TorusElement<double> torus_lambda_to_t(const ConcyclicConfig& cfg) {
  std::array<double, 4> q{};
  for (int i = 1; i <= 4; ++i) q[i - 1] = std::sqrt(2 * cfg.radius(i));
  return TorusElement<double>(q);
}

}  // namespace threeterm
