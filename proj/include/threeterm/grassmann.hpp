#pragma once

// Plucker coordinates of 2x4 matrices. The six 2x2 minors always satisfy
// P12*P34 + P14*P23 = P13*P24, and every 6-tuple on that quadric is the minor
// vector of some matrix.

#include <algorithm>
#include <array>
#include <cmath>

#include "errors.hpp"
#include "relations.hpp"

namespace threeterm {

template <Scalar T>
struct Matrix2x4 {
  std::array<std::array<T, 4>, 2> rows{};

  // 1-based column access.
  ProjectivePoint<T> column(int k) const {
    check_column(k);
    return {rows[0][k - 1], rows[1][k - 1]};
  }
  void set_column(int k, const ProjectivePoint<T>& c) {
    check_column(k);
    rows[0][k - 1] = c[0];
    rows[1][k - 1] = c[1];
  }

  friend bool operator==(const Matrix2x4&, const Matrix2x4&) = default;

 private:
  static void check_column(int k) {
    if (k < 1 || k > 4) throw index_error("column index must be in 1..4");
  }
};

// Minor vector (P12, P13, P14, P23, P24, P34); extended antisymmetrically by
// SixTuple::at.
template <Scalar T>
using PluckerVector = SixTuple<T>;

template <Scalar T>
PluckerVector<T> minors(const Matrix2x4<T>& m) {
  PluckerVector<T> p;
  for (std::size_t k = 0; k < 6; ++k) {
    const auto [i, j] = kPairs[k];
    p.values[k] = det2(m.column(i), m.column(j));
  }
  return p;
}

/// Matrix whose minors reproduce an on-quadric tuple. The largest-magnitude
/// entry P_ij (first in index order on ties) is the pivot: column i becomes
/// (1, 0), column j becomes (0, P_ij), and every other column k is
/// (-P_jk / P_ij, P_ik). The quadric relation is what makes the one minor not
/// fixed by construction come out right. The zero tuple maps to the zero
/// matrix.
template <Scalar T>
Matrix2x4<T> reconstruct(const PluckerVector<T>& p, double tol = 1e-10) {
  Matrix2x4<T> m;
  std::size_t pivot = 0;
  for (std::size_t k = 1; k < 6; ++k) {
    if (std::abs(p.values[k]) > std::abs(p.values[pivot])) pivot = k;
  }
  if (p.values[pivot] == T{0}) return m;

  if (!is_on_quadric(p, tol)) {
    throw precondition_error("tuple is off the Plucker quadric", relative_residual(p));
  }

  const auto [i, j] = kPairs[pivot];
  const T pij = p.values[pivot];
  m.set_column(i, {T{1}, T{0}});
  m.set_column(j, {T{0}, pij});
  for (int k = 1; k <= 4; ++k) {
    if (k == i || k == j) continue;
    m.set_column(k, {-p.at(j, k) / pij, p.at(i, k)});
  }
  return m;
}

template <Scalar T>
Matrix2x4<T> column_rescale(const Matrix2x4<T>& m, const std::array<T, 4>& s) {
  Matrix2x4<T> out = m;
  for (int r = 0; r < 2; ++r) {
    for (int k = 0; k < 4; ++k) out.rows[r][k] *= s[k];
  }
  return out;
}

// A permutation of {1,2,3,4} in one-line notation: sigma[k-1] = sigma(k).
using Permutation4 = std::array<int, 4>;

inline void check_permutation(const Permutation4& sigma) {
  std::array<bool, 4> seen{};
  for (int v : sigma) {
    if (v < 1 || v > 4 || seen[v - 1]) throw domain_error("not a permutation of {1,2,3,4}");
    seen[v - 1] = true;
  }
}

// Column k of the result is column sigma(k) of m.
template <Scalar T>
Matrix2x4<T> column_permute(const Matrix2x4<T>& m, const Permutation4& sigma) {
  check_permutation(sigma);
  Matrix2x4<T> out;
  for (int k = 1; k <= 4; ++k) out.set_column(k, m.column(sigma[k - 1]));
  return out;
}

// Minors of column_permute(m, sigma) in terms of those of m:
// P'_kl = P_sigma(k)sigma(l), using P_ji = -P_ij.
template <Scalar T>
PluckerVector<T> permute_minors(const PluckerVector<T>& p, const Permutation4& sigma) {
  check_permutation(sigma);
  PluckerVector<T> out;
  for (std::size_t k = 0; k < 6; ++k) {
    const auto [i, j] = kPairs[k];
    out.values[k] = p.at(sigma[i - 1], sigma[j - 1]);
  }
  return out;
}

}  // namespace threeterm
