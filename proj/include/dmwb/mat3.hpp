#pragma once

#include <array>
#include <cmath>
#include <complex>

#include "dmwb/errors.hpp"
#include "dmwb/ext_order.hpp"

namespace dmwb {

using Complex = std::complex<double>;

/// Dense 3x3 complex matrix, the working type for lattice generators and
/// small projective linear algebra.
struct Mat3 {
  std::array<std::array<Complex, 3>, 3> a{};

  static Mat3 identity() {
    Mat3 m;
    for (int i = 0; i < 3; ++i) m.a[i][i] = 1.0;
    return m;
  }

  friend Mat3 operator*(const Mat3& x, const Mat3& y) {
    Mat3 out;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        Complex s = 0.0;
        for (int k = 0; k < 3; ++k) s += x.a[i][k] * y.a[k][j];
        out.a[i][j] = s;
      }
    return out;
  }

  std::array<Complex, 3> apply(const std::array<Complex, 3>& v) const {
    std::array<Complex, 3> out{};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) out[i] += a[i][j] * v[j];
    return out;
  }

  Complex det() const {
    return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
           a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
           a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
  }

  double max_abs() const {
    double m = 0.0;
    for (const auto& row : a)
      for (const Complex& v : row) m = std::max(m, std::abs(v));
    return m;
  }
};

inline Mat3 inverse(const Mat3& m) {
  Complex d = m.det();
  if (std::abs(d) < 1e-14 * std::max(1.0, m.max_abs()))
    throw Error("matrix is not invertible");
  Mat3 out;
  const auto& a = m.a;
  out.a[0][0] = (a[1][1] * a[2][2] - a[1][2] * a[2][1]) / d;
  out.a[0][1] = (a[0][2] * a[2][1] - a[0][1] * a[2][2]) / d;
  out.a[0][2] = (a[0][1] * a[1][2] - a[0][2] * a[1][1]) / d;
  out.a[1][0] = (a[1][2] * a[2][0] - a[1][0] * a[2][2]) / d;
  out.a[1][1] = (a[0][0] * a[2][2] - a[0][2] * a[2][0]) / d;
  out.a[1][2] = (a[0][2] * a[1][0] - a[0][0] * a[1][2]) / d;
  out.a[2][0] = (a[1][0] * a[2][1] - a[1][1] * a[2][0]) / d;
  out.a[2][1] = (a[0][1] * a[2][0] - a[0][0] * a[2][1]) / d;
  out.a[2][2] = (a[0][0] * a[1][1] - a[0][1] * a[1][0]) / d;
  return out;
}

/// Projective equality: A = lambda B for some nonzero scalar, within tol
/// (relative to the largest entry).
inline bool projectively_equal(const Mat3& x, const Mat3& y, double tol) {
  int bi = 0, bj = 0;
  double best = -1.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (std::abs(y.a[i][j]) > best) { best = std::abs(y.a[i][j]); bi = i; bj = j; }
  if (best <= 0.0) return x.max_abs() <= tol;
  if (std::abs(x.a[bi][bj]) == 0.0) return false;
  Complex lambda = y.a[bi][bj] / x.a[bi][bj];
  double scale = std::max(1.0, y.max_abs());
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (std::abs(lambda * x.a[i][j] - y.a[i][j]) > tol * scale) return false;
  return true;
}

/// Least n <= cap with M^n projectively equal to the identity; infinity when
/// there is none.
inline ExtOrder elliptic_order(const Mat3& m, double tol = 1e-9, int cap = 200) {
  Mat3 pow = Mat3::identity();
  for (int n = 1; n <= cap; ++n) {
    pow = pow * m;
    double s = pow.max_abs();  // keep entries O(1)
    if (s > 0.0)
      for (auto& row : pow.a)
        for (Complex& v : row) v /= s;
    if (projectively_equal(pow, Mat3::identity(), tol)) return ExtOrder::of(n);
  }
  return ExtOrder::infinity();
}

} // namespace dmwb
