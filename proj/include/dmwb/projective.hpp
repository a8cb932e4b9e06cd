#pragma once

#include <array>
#include <cstddef>
#include <string>

#include "dmwb/errors.hpp"
#include "dmwb/rational.hpp"

namespace dmwb {

/// A point of the rational projective plane, stored as an unnormalized
/// representative.  Equality is projective: all 2x2 minors of the pair of
/// representatives vanish.  Incidence tests are exact zero tests.
struct ProjPoint {
  std::array<Rational, 3> coords;

  ProjPoint(Rational a, Rational b, Rational c) : coords{a, b, c} {
    if (coords[0] == Rational(0) && coords[1] == Rational(0) && coords[2] == Rational(0))
      throw Error("projective point needs a nonzero coordinate");
  }
  ProjPoint(long long a, long long b, long long c)
      : ProjPoint(Rational(a), Rational(b), Rational(c)) {}

  std::string str() const {
    return "[" + to_string(coords[0]) + ":" + to_string(coords[1]) + ":" +
           to_string(coords[2]) + "]";
  }
};

/// A line of the rational projective plane as a linear form, up to scale.
struct ProjLine {
  std::array<Rational, 3> form;

  ProjLine(Rational a, Rational b, Rational c) : form{a, b, c} {
    if (form[0] == Rational(0) && form[1] == Rational(0) && form[2] == Rational(0))
      throw Error("projective line needs a nonzero form");
  }
  ProjLine(long long a, long long b, long long c)
      : ProjLine(Rational(a), Rational(b), Rational(c)) {}
};

inline bool projectively_equal(const ProjPoint& x, const ProjPoint& y) {
  const auto& a = x.coords;
  const auto& b = y.coords;
  return a[0] * b[1] - a[1] * b[0] == Rational(0) &&
         a[0] * b[2] - a[2] * b[0] == Rational(0) &&
         a[1] * b[2] - a[2] * b[1] == Rational(0);
}

inline bool projectively_equal(const ProjLine& x, const ProjLine& y) {
  const auto& a = x.form;
  const auto& b = y.form;
  return a[0] * b[1] - a[1] * b[0] == Rational(0) &&
         a[0] * b[2] - a[2] * b[0] == Rational(0) &&
         a[1] * b[2] - a[2] * b[1] == Rational(0);
}

inline bool incident(const ProjPoint& p, const ProjLine& l) {
  return p.coords[0] * l.form[0] + p.coords[1] * l.form[1] + p.coords[2] * l.form[2] ==
         Rational(0);
}

namespace detail {
inline std::array<Rational, 3> cross(const std::array<Rational, 3>& a,
                                     const std::array<Rational, 3>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
} // namespace detail

/// Line through two distinct points.
inline ProjLine join(const ProjPoint& p, const ProjPoint& q) {
  auto c = detail::cross(p.coords, q.coords);
  return ProjLine(c[0], c[1], c[2]);
}

/// Intersection point of two distinct lines.
inline ProjPoint meet(const ProjLine& l, const ProjLine& m) {
  auto c = detail::cross(l.form, m.form);
  return ProjPoint(c[0], c[1], c[2]);
}

namespace detail {
inline Rational rational_pow(const Rational& q, int n) {
  Rational r(1);
  for (int i = 0; i < n; ++i) r *= q;
  return r;
}
} // namespace detail

/// Coordinate-wise n-th power map on the projective plane (n >= 1).
inline ProjPoint power_map(int n, const ProjPoint& u) {
  if (n < 1) throw Error("power_map needs n >= 1");
  return ProjPoint(detail::rational_pow(u.coords[0], n),
                   detail::rational_pow(u.coords[1], n),
                   detail::rational_pow(u.coords[2], n));
}

/// Degree of the coordinate-wise n-th power map on P^{k-1}: n^(k-1).
inline long long power_map_degree(int n, int k) {
  long long d = 1;
  for (int i = 0; i + 1 < k; ++i) d *= n;
  return d;
}

} // namespace dmwb
