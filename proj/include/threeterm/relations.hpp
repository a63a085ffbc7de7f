#pragma once

// The quadric of 6-tuples satisfying a12*a34 + a14*a23 = a13*a24, the
// rescaling action of the 4-torus on it, and the cross-ratio that separates
// its orbits.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <concepts>
#include <sstream>
#include <string>
#include <type_traits>

#include "errors.hpp"

namespace threeterm {

template <typename T>
struct is_complex : std::false_type {};
template <typename T>
struct is_complex<std::complex<T>> : std::true_type {};

// Field of scalars the algebraic modules are generic over: real or complex
// double precision.
template <typename T>
concept Scalar = std::same_as<T, double> || std::same_as<T, std::complex<double>>;

namespace detail {

inline std::string to_string(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

inline std::string to_string(const std::complex<double>& v) {
  std::ostringstream os;
  os.precision(17);
  os << v.real() << (v.imag() < 0 ? "-" : "+") << std::abs(v.imag()) << "i";
  return os.str();
}

template <Scalar T>
bool all_finite(const T& v) {
  if constexpr (is_complex<T>::value) {
    return std::isfinite(v.real()) && std::isfinite(v.imag());
  } else {
    return std::isfinite(v);
  }
}

}  // namespace detail

// Position of the pair (i, j), 1 <= i < j <= 4, in the fixed ordering
// 12, 13, 14, 23, 24, 34.
inline int pair_index(int i, int j) {
  if (i < 1 || j > 4 || i >= j) {
    throw index_error("pair index requires 1 <= i < j <= 4, got (" +
                      std::to_string(i) + "," + std::to_string(j) + ")");
  }
  return i == 1 ? j - 2 : (i == 2 ? j : 5);
}

inline constexpr std::array<std::array<int, 2>, 6> kPairs{
    {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}};

/// Six values indexed by the pairs of {1,2,3,4}. Membership in the quadric
/// is a checked predicate, not an invariant.
template <Scalar T>
struct SixTuple {
  std::array<T, 6> values{};

  SixTuple() = default;
  explicit SixTuple(const std::array<T, 6>& v) : values(v) {
    for (const auto& x : values) {
      if (!detail::all_finite(x)) throw domain_error("six-tuple entries must be finite");
    }
  }
  SixTuple(T a12, T a13, T a14, T a23, T a24, T a34)
      : SixTuple(std::array<T, 6>{a12, a13, a14, a23, a24, a34}) {}

  const T& operator()(int i, int j) const { return values[pair_index(i, j)]; }
  T& operator()(int i, int j) { return values[pair_index(i, j)]; }

  // Antisymmetric extension: at(j, i) = -at(i, j), at(i, i) = 0.
  T at(int i, int j) const {
    if (i == j) return T{0};
    return i < j ? (*this)(i, j) : -(*this)(j, i);
  }

  const T& a12() const { return values[0]; }
  const T& a13() const { return values[1]; }
  const T& a14() const { return values[2]; }
  const T& a23() const { return values[3]; }
  const T& a24() const { return values[4]; }
  const T& a34() const { return values[5]; }

  bool has_zero_entry() const {
    return std::any_of(values.begin(), values.end(),
                       [](const T& v) { return v == T{0}; });
  }

  friend bool operator==(const SixTuple&, const SixTuple&) = default;
};

template <Scalar T>
T residual(const SixTuple<T>& t) {
  return t.a12() * t.a34() + t.a14() * t.a23() - t.a13() * t.a24();
}

// Scale against which residuals are judged: the largest of the three quadric
// monomials, floored at 1.
template <Scalar T>
double quadric_scale(const SixTuple<T>& t) {
  return std::max({std::abs(t.a12() * t.a34()), std::abs(t.a14() * t.a23()),
                   std::abs(t.a13() * t.a24()), 1.0});
}

template <Scalar T>
double relative_residual(const SixTuple<T>& t) {
  return std::abs(residual(t)) / quadric_scale(t);
}

template <Scalar T>
bool is_on_quadric(const SixTuple<T>& t, double tol) {
  if (!(tol > 0)) throw domain_error("tolerance must be positive");
  return std::abs(residual(t)) <= tol * quadric_scale(t);
}

/// Element (q1, q2, q3, q4) of the torus, acting by a_ij -> q_i q_j a_ij.
template <Scalar T>
class TorusElement {
 public:
  explicit TorusElement(const std::array<T, 4>& q) : q_(q) {
    for (const auto& v : q_) {
      if (v == T{0}) throw degenerate_error("torus element entries must be nonzero");
      if (!detail::all_finite(v)) throw domain_error("torus element entries must be finite");
    }
  }
  TorusElement(T q1, T q2, T q3, T q4) : TorusElement(std::array<T, 4>{q1, q2, q3, q4}) {}

  static TorusElement identity() { return TorusElement(T{1}, T{1}, T{1}, T{1}); }

  // 1-based, matching the pair indexing of SixTuple.
  const T& operator[](int i) const { return q_.at(static_cast<std::size_t>(i - 1)); }
  const std::array<T, 4>& values() const { return q_; }

  TorusElement operator-() const { return TorusElement(-q_[0], -q_[1], -q_[2], -q_[3]); }

  friend TorusElement operator*(const TorusElement& a, const TorusElement& b) {
    return TorusElement(a.q_[0] * b.q_[0], a.q_[1] * b.q_[1], a.q_[2] * b.q_[2],
                        a.q_[3] * b.q_[3]);
  }

  friend bool operator==(const TorusElement&, const TorusElement&) = default;

 private:
  std::array<T, 4> q_;
};

template <Scalar T>
SixTuple<T> torus_apply(const TorusElement<T>& q, const SixTuple<T>& t) {
  SixTuple<T> out;
  for (std::size_t k = 0; k < 6; ++k) {
    const auto [i, j] = kPairs[k];
    out.values[k] = q[i] * q[j] * t.values[k];
  }
  return out;
}

// a12*a34 / (a23*a14); constant along torus orbits.
template <Scalar T>
T cross_ratio_invariant(const SixTuple<T>& t) {
  const T den = t.a23() * t.a14();
  if (den == T{0}) throw degenerate_error("cross-ratio invariant undefined: a23*a14 = 0");
  return t.a12() * t.a34() / den;
}

/// Entrywise quotient c_ij = b_ij / a_ij of two nonvanishing tuples.
template <Scalar T>
struct RatioTuple {
  SixTuple<T> c;

  RatioTuple(const SixTuple<T>& a, const SixTuple<T>& b) {
    if (a.has_zero_entry() || b.has_zero_entry()) {
      throw degenerate_error("ratio tuple requires nonzero entries");
    }
    for (std::size_t k = 0; k < 6; ++k) c.values[k] = b.values[k] / a.values[k];
  }

  const T& operator()(int i, int j) const { return c(i, j); }
};

template <Scalar T>
T principal_sqrt(const T& x) {
  if constexpr (is_complex<T>::value) {
    // A signed zero imaginary part would put -1 on the lower branch.
    return std::sqrt(T(x.real(), x.imag() == 0.0 ? 0.0 : x.imag()));
  } else {
    if (x < 0) {
      throw not_same_orbit_error(
          "no real torus element: q1^2 = c12*c13/c23 = " + detail::to_string(x) +
          " is negative (the tuples are related only over the complex numbers)");
    }
    return std::sqrt(x);
  }
}

// Largest relative deviation max_ij |q_i q_j a_ij - b_ij| / |b_ij|.
template <Scalar T>
double rescaling_deviation(const TorusElement<T>& q, const SixTuple<T>& a,
                           const SixTuple<T>& b) {
  const auto mapped = torus_apply(q, a);
  double worst = 0;
  for (std::size_t k = 0; k < 6; ++k) {
    worst = std::max(worst, std::abs(mapped.values[k] - b.values[k]) / std::abs(b.values[k]));
  }
  return worst;
}

/// Finds q with b_ij = q_i q_j a_ij for two nonvanishing on-quadric tuples
/// with equal cross-ratio invariants. q is unique up to a global sign; the
/// representative returned takes q1 as the principal square root of
/// c12*c13/c23.
///
/// Throws degenerate_error on a zero entry, precondition_error when either
/// tuple is off the quadric, and not_same_orbit_error when the invariants
/// differ (or, for real scalars, when only a complex rescaling exists).
template <Scalar T>
TorusElement<T> rescaling_solve(const SixTuple<T>& a, const SixTuple<T>& b, double tol) {
  if (!(tol > 0)) throw domain_error("tolerance must be positive");
  if (a.has_zero_entry() || b.has_zero_entry()) {
    throw degenerate_error("rescaling requires tuples of nonzero numbers");
  }
  if (!is_on_quadric(a, tol)) {
    throw precondition_error("first tuple is off the quadric", relative_residual(a));
  }
  if (!is_on_quadric(b, tol)) {
    throw precondition_error("second tuple is off the quadric", relative_residual(b));
  }
  const T cra = cross_ratio_invariant(a);
  const T crb = cross_ratio_invariant(b);
  if (std::abs(cra - crb) > tol * std::max({std::abs(cra), std::abs(crb), 1.0})) {
    throw not_same_orbit_error("cross-ratio invariants differ: " + detail::to_string(cra) +
                               " vs " + detail::to_string(crb));
  }

  const RatioTuple<T> c(a, b);
  const T q1 = principal_sqrt(T(c(1, 2) * c(1, 3) / c(2, 3)));
  const TorusElement<T> q(q1, c(1, 2) / q1, c(1, 3) / q1, c(1, 4) / q1);

  const double dev = rescaling_deviation(q, a, b);
  if (dev > tol) {
    throw not_same_orbit_error("rescaling residual " + detail::to_string(dev) +
                               " exceeds tolerance " + detail::to_string(tol));
  }
  return q;
}

template <Scalar T>
using ProjectivePoint = std::array<T, 2>;

template <Scalar T>
T det2(const ProjectivePoint<T>& u, const ProjectivePoint<T>& v) {
  return u[0] * v[1] - v[0] * u[1];
}

/// Cross-ratio [X1,X2,X3,X4] = P12*P34 / (P23*P14) of four points of the
/// projective line given by homogeneous coordinates. Any coincidence that
/// leaves P23*P14 nonzero is allowed.
template <Scalar T>
T cross_ratio_points(const ProjectivePoint<T>& x1, const ProjectivePoint<T>& x2,
                     const ProjectivePoint<T>& x3, const ProjectivePoint<T>& x4) {
  const T den = det2(x2, x3) * det2(x1, x4);
  if (den == T{0}) throw degenerate_error("cross-ratio undefined: P23*P14 = 0");
  return det2(x1, x2) * det2(x3, x4) / den;
}

}  // namespace threeterm
