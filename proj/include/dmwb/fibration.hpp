#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <utility>
#include <vector>

#include "dmwb/complex_projective.hpp"
#include "dmwb/errors.hpp"
#include "dmwb/projective.hpp"

namespace dmwb {

// ---------------------------------------------------------------------------
// The pencil of conics through the four base points
// ---------------------------------------------------------------------------

/// Quadratic form a z1^2 + b z1z2 + c z1z3 + d z2^2 + e z2z3 + f z3^2.
struct Conic {
  Complex a{}, b{}, c{}, d{}, e{}, f{};

  Complex eval(const CP2Pt& z) const {
    const Complex z1 = z.v[0], z2 = z.v[1], z3 = z.v[2];
    return a * z1 * z1 + b * z1 * z2 + c * z1 * z3 + d * z2 * z2 + e * z2 * z3 + f * z3 * z3;
  }

  /// Determinant of the symmetric coefficient matrix; zero exactly for the
  /// reducible (line-pair) members of the pencil.
  Complex sym_det() const {
    const Complex m00 = a, m01 = b / 2.0, m02 = c / 2.0;
    const Complex m11 = d, m12 = e / 2.0, m22 = f;
    return m00 * (m11 * m22 - m12 * m12) - m01 * (m01 * m22 - m12 * m02) +
           m02 * (m01 * m12 - m11 * m02);
  }
};

/// Member of the pencil through the four base points for a parameter [c : e]:
/// c (z1z3 - z1z2) + e (z2z3 - z1z2).
inline Conic conic_coeffs(const CP1& param) {
  const Complex c = param.v[0], e = param.v[1];
  Conic q;
  q.b = -(c + e);
  q.c = c;
  q.e = e;
  return q;
}

// ---------------------------------------------------------------------------
// The Lefschetz fibration
// ---------------------------------------------------------------------------

inline const std::array<CP2Pt, 4>& fibration_base_points() {
  static const std::array<CP2Pt, 4> pts = {CP2Pt{{1.0, 0.0, 0.0}}, CP2Pt{{0.0, 1.0, 0.0}},
                                           CP2Pt{{0.0, 0.0, 1.0}}, CP2Pt{{1.0, 1.0, 1.0}}};
  return pts;
}

/// [z1:z2:z3] -> [z2(z1-z3) : z1(z2-z3)], undefined exactly at the four base
/// points (both coordinates vanish there).
inline CP1 eval_fibration(const CP2Pt& z, double tol = 1e-12) {
  const CP2Pt n = z.normalized();
  const Complex a = n.v[1] * (n.v[0] - n.v[2]);
  const Complex b = n.v[0] * (n.v[1] - n.v[2]);
  if (std::abs(a) <= tol && std::abs(b) <= tol)
    throw BasePoint("fibration undefined at base point " + z.str());
  return CP1{{a, b}}.normalized();
}

/// Exact-rational variant: the unnormalized pair, or BasePoint when both
/// coordinates vanish identically.
inline std::array<Rational, 2> eval_fibration_exact(const ProjPoint& z) {
  const Rational a = z.coords[1] * (z.coords[0] - z.coords[2]);
  const Rational b = z.coords[0] * (z.coords[1] - z.coords[2]);
  if (a == Rational(0) && b == Rational(0))
    throw BasePoint("fibration undefined at base point " + z.str());
  return {a, b};
}

enum class BlowupChart { A, B };  // (w1, w2|1) and (w1|2, w2)

/// The fibration on the exceptional divisor over p4 = [1:1:1], in the two
/// blow-up charts.
inline CP1 eval_fibration_chart_p4(BlowupChart chart, Complex u, Complex v) {
  if (chart == BlowupChart::A)  // (w1, w2|1)
    return CP1{{u * v + 1.0, v * (u + 1.0)}}.normalized();
  return CP1{{u * (v + 1.0), u * v + 1.0}}.normalized();  // (w1|2, w2)
}

inline const CP1& marked_point_10() { static const CP1 p{{1.0, 0.0}}; return p; }
inline const CP1& marked_point_01() { static const CP1 p{{0.0, 1.0}}; return p; }
inline const CP1& marked_point_11() { static const CP1 p{{1.0, 1.0}}; return p; }

/// The two arrangement lines forming the singular fibre over a marked point:
///   [1:0] -> l01 u l23 = {z1 = 0} u {z2 = z3}
///   [0:1] -> l02 u l13 = {z2 = 0} u {z1 = z3}
///   [1:1] -> l03 u l12 = {z3 = 0} u {z1 = z2}
/// Lines are exact rational forms; anything else is NotMarkedPoint.
inline std::pair<ProjLine, ProjLine> singular_fiber(const CP1& marked, double tol = 1e-9) {
  if (projectively_equal(marked, marked_point_10(), tol))
    return {ProjLine(1, 0, 0), ProjLine(0, 1, -1)};
  if (projectively_equal(marked, marked_point_01(), tol))
    return {ProjLine(0, 1, 0), ProjLine(1, 0, -1)};
  if (projectively_equal(marked, marked_point_11(), tol))
    return {ProjLine(0, 0, 1), ProjLine(1, -1, 0)};
  throw NotMarkedPoint("no singular fibre over " + marked.str());
}

// ---------------------------------------------------------------------------
// Moduli of five points and the forgetful square
// ---------------------------------------------------------------------------

/// Five pairwise distinct points of the projective line.
struct FiveConfig {
  std::array<CP1, 5> pts;

  static FiveConfig of(std::array<CP1, 5> pts, double tol = 1e-9) {
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j)
        if (proj_distance(pts[i], pts[j]) <= tol)
          throw DegenerateConfig("coincident points " + std::to_string(i + 1) + "," +
                                 std::to_string(j + 1));
    return {pts};
  }

  /// Affine convenience: x -> [x : 1].
  static FiveConfig affine(const std::array<Complex, 5>& xs, double tol = 1e-9) {
    std::array<CP1, 5> pts{};
    for (int i = 0; i < 5; ++i) pts[i] = CP1{{xs[i], 1.0}};
    return of(pts, tol);
  }
};

namespace detail {
inline Complex det2(const CP1& u, const CP1& w) { return u.v[0] * w.v[1] - u.v[1] * w.v[0]; }
} // namespace detail

/// Q5 -> P^2 leg of the forgetful square:
/// [det(v1,v4)/det(v1,v5) : det(v2,v4)/det(v2,v5) : det(v3,v4)/det(v3,v5)].
inline CP2Pt forgetful_top(const FiveConfig& cfg, double tol = 1e-12) {
  std::array<Complex, 3> out{};
  for (int i = 0; i < 3; ++i) {
    Complex den = detail::det2(cfg.pts[i], cfg.pts[4]);
    if (std::abs(den) <= tol) throw DegenerateConfig("denominator determinant vanishes");
    out[i] = detail::det2(cfg.pts[i], cfg.pts[3]) / den;
  }
  return CP2Pt{out}.normalized();
}

/// Q4 -> P^1 leg: [det(v1,v3)/det(v1,v4) : det(v2,v3)/det(v2,v4)].
inline CP1 forgetful_bottom(const std::array<CP1, 4>& pts, double tol = 1e-12) {
  std::array<Complex, 2> out{};
  for (int i = 0; i < 2; ++i) {
    Complex den = detail::det2(pts[i], pts[3]);
    if (std::abs(den) <= tol) throw DegenerateConfig("denominator determinant vanishes");
    out[i] = detail::det2(pts[i], pts[2]) / den;
  }
  return CP1{out}.normalized();
}

// ---------------------------------------------------------------------------
// Fundamental-domain coordinates
// ---------------------------------------------------------------------------

/// Cone-metric angle data.  theta and phi position the cone points; alpha and
/// beta are the auxiliary apex angles of the v-coordinate expressions (the
/// displayed z' formulas correspond to alpha = beta = theta/2 + pi/2).
struct ConeParams {
  double theta;
  double phi;
  double alpha;
  double beta;
};

/// Positions (v_*, v0, v1, v2, v3) of the five cone points on the fibre line.
inline std::array<Complex, 5> v_coords(const std::array<Complex, 3>& z, const ConeParams& p,
                                       double eps = 1e-12) {
  const double st = std::sin(p.theta);
  const double stp = std::sin(p.theta + p.phi);
  const double sp = std::sin(p.phi);
  const double sa = std::sin(p.alpha - p.phi);
  const double sb = std::sin(p.beta - p.theta);
  if (std::abs(stp) <= eps) throw DegenerateAngles("sin(theta+phi) vanishes");
  if (std::abs(sa) <= eps) throw DegenerateAngles("sin(alpha-phi) vanishes");
  if (std::abs(sb) <= eps) throw DegenerateAngles("sin(beta-theta) vanishes");
  const Complex i(0.0, 1.0);
  const Complex emphi = std::exp(-i * p.phi);
  const Complex emtp = std::exp(-i * (p.theta + p.phi));
  std::array<Complex, 5> v{};
  v[0] = 0.0;  // v_*
  v[1] = -i * st / stp * z[2] + i * std::sin(p.alpha) / sa * z[0];
  v[2] = -i * st / stp * z[2] + i * emphi * z[0];
  v[3] = -i * emphi * z[1] + i * emtp * sp / stp * z[2];
  v[4] = -i * emtp * std::sin(p.beta) / sb * z[1] + i * emtp * sp / stp * z[2];
  return v;
}

/// The isomorphism onto the coordinates in which the fibration is the
/// forgetful map: z'_i = (v_i - v_0)/(v_i - v_*), expanded in (theta, phi).
/// (The z3' numerator carries -sin(theta) z1, matching z2'; the variant with
/// a positive sign is inconsistent with the v-expressions above.)
inline std::array<Complex, 3> zprime_coords(const std::array<Complex, 3>& z, double theta,
                                            double phi, double eps = 1e-12) {
  const double st = std::sin(theta);
  const double stp = std::sin(theta + phi);
  const double sp = std::sin(phi);
  const double s = sp + std::sin(theta - phi);
  const Complex i(0.0, 1.0);
  const Complex eith = std::exp(i * theta);
  const Complex emphi = std::exp(-i * phi);
  const Complex emtp = std::exp(-i * (theta + phi));
  const Complex z1 = z[0], z2 = z[1], z3 = z[2];

  const double zscale = std::max({std::abs(z1), std::abs(z2), std::abs(z3), 1e-300});
  auto guard = [&](Complex den) {
    if (std::abs(den) <= eps * zscale)
      throw DegenerateDenominator("z' denominator vanishes");
    return den;
  };

  Complex d1 = guard(s * (stp * emphi * z1 - st * z3));
  Complex n1 = stp * sp * (1.0 - eith) * emphi * z1;

  Complex d2 = guard(s * (-stp * emphi * z2 + sp * emtp * z3));
  Complex n2 = stp * (-st * z1 - s * emphi * z2 + s * emphi * z3);

  Complex d3 = guard(s * (-stp * emtp * z2 + sp * emtp * z3));
  Complex n3 = stp * (-st * z1 - s * emtp * z2 + s * emphi * z3);

  return {n1 / d1, n2 / d2, n3 / d3};
}

/// A value of the fibre parameter: a complex number or the point at infinity.
struct ExtendedComplex {
  Complex value{};
  bool infinite = false;

  CP1 as_cp1() const { return infinite ? CP1{{1.0, 0.0}} : CP1{{value, 1.0}}; }
};

/// The fibration in the fundamental-domain z-coordinates.  Zero and infinity
/// loci are unions of two lines each; a simultaneous zero of numerator and
/// denominator is reported as Indeterminate.
inline ExtendedComplex f_z(const std::array<Complex, 3>& z, double theta, double phi,
                           double tol = 1e-12) {
  const double st = std::sin(theta);
  const double sp = std::sin(phi);
  const double s = sp + std::sin(theta - phi);
  const Complex i(0.0, 1.0);
  const Complex eith = std::exp(i * theta);
  const Complex z1 = z[0], z2 = z[1], z3 = z[2];

  const Complex num =
      (-st * std::exp(i * phi) * z1 - s * z2 + s * z3) * (z1 + std::exp(-i * theta) * z2 - z3);
  const Complex den = -sp * (1.0 - eith) * (1.0 - std::exp(-i * theta)) * z1 * z2;

  const double zscale = std::max({std::abs(z1), std::abs(z2), std::abs(z3), 1e-300});
  const double quad = zscale * zscale;
  const bool num_zero = std::abs(num) <= tol * quad;
  const bool den_zero = std::abs(den) <= tol * quad;
  if (num_zero && den_zero) throw Indeterminate("0/0 in the fibration");
  if (den_zero) return {Complex{}, true};
  return {num / den, false};
}

/// The companion chart in w-coordinates, exactly as displayed; there is no
/// w <-> z change of coordinates in this library, so this chart is excluded
/// from the cross-formula sweeps.
inline ExtendedComplex f_w(const std::array<Complex, 3>& w, double theta, double phi,
                           double tol = 1e-12) {
  const double st = std::sin(theta);
  const double sp = std::sin(phi);
  const double s = sp + std::sin(theta - phi);
  const Complex i(0.0, 1.0);
  const Complex emth = std::exp(-i * theta);
  const Complex emphi = std::exp(-i * phi);
  const Complex w1 = w[0], w2 = w[1], w3 = w[2];

  const Complex num = (-st * emphi * w1 - emth * s * w2 + s * w3) * (w1 + w2 - w3);
  const Complex den = (-st * emphi * w1 - s * w2 + s * w3) * (w1 + emth * w2 - w3);

  const double wscale = std::max({std::abs(w1), std::abs(w2), std::abs(w3), 1e-300});
  const double quad = wscale * wscale;
  const bool num_zero = std::abs(num) <= tol * quad;
  const bool den_zero = std::abs(den) <= tol * quad;
  if (num_zero && den_zero) throw Indeterminate("0/0 in the fibration");
  if (den_zero) return {Complex{}, true};
  return {num / den, false};
}

// ---------------------------------------------------------------------------
// The edge gamma_{3,4} and the static projection tables
// ---------------------------------------------------------------------------

inline double gamma34_u_max(double theta, double phi, double eps = 1e-12) {
  const double stp = std::sin(theta + phi);
  if (std::abs(stp) <= eps) throw DegenerateAngles("sin(theta+phi) vanishes");
  return std::sin(phi) * (2.0 * std::cos(theta) - 1.0) / stp;
}

/// The point of the edge gamma_{3,4} at parameter u.
inline std::array<Complex, 3> gamma34_point(double u, double theta, double phi) {
  const double s = std::sin(phi) + std::sin(theta - phi);
  return {Complex(s / std::sin(theta + phi), 0.0), Complex(u, 0.0), Complex(1.0, 0.0)};
}

/// Projection of the edge gamma_{3,4} to the fibre parameter.  The admissible
/// parameter range is the open-closed interval between 0 and u_max (u_max
/// itself projects exactly to 1; u -> 0 is the pole over [1:0]).  u_max is
/// negative when 2cos(theta) < 1, in which case the interval sits left of 0.
inline Complex gamma34_projection(double u, double theta, double phi, double eps = 1e-12) {
  const double umax = gamma34_u_max(theta, phi, eps);
  if (std::abs(umax) <= eps) throw DegenerateAngles("edge gamma_{3,4} degenerates");
  const bool inside = umax > 0.0 ? (u > 0.0 && u <= umax) : (u < 0.0 && u >= umax);
  if (!inside)
    throw OutOfRange("u = " + std::to_string(u) + " outside (0, " + std::to_string(umax) + "]");
  const double sp = std::sin(phi);
  const double stp = std::sin(theta + phi);
  const Complex i(0.0, 1.0);
  const Complex emth = std::exp(-i * theta);
  const Complex num =
      (sp * emth - stp * u) * (sp * (1.0 - 2.0 * std::cos(theta)) + stp * emth * u);
  const Complex den = -sp * stp * (1.0 - emth) * (1.0 - std::exp(i * theta)) * u;
  return num / den;
}

enum class BoundaryCurve { OneInf, ZeroOne, ZeroInf };

inline std::string curve_name(BoundaryCurve c) {
  switch (c) {
    case BoundaryCurve::OneInf: return "1-inf";
    case BoundaryCurve::ZeroOne: return "0-1";
    default: return "0-inf";
  }
}

struct ProjectionTables {
  // vertex index -> marked point
  std::vector<std::pair<int, CP1>> vertices;
  // edge (i,j) -> boundary curve
  std::vector<std::pair<std::pair<int, int>, BoundaryCurve>> edges;
};

/// Static classification of the polyhedron's vertices and non-point edges
/// under the fibration.
inline ProjectionTables projection_tables() {
  ProjectionTables t;
  for (int v : {1, 3, 6, 9, 12}) t.vertices.push_back({v, marked_point_10()});
  for (int v : {2, 4, 8, 10, 14}) t.vertices.push_back({v, marked_point_11()});
  for (int v : {5, 7, 11, 13}) t.vertices.push_back({v, marked_point_01()});
  t.edges = {
      {{3, 4}, BoundaryCurve::OneInf},   {{6, 8}, BoundaryCurve::OneInf},
      {{9, 10}, BoundaryCurve::OneInf},  {{12, 14}, BoundaryCurve::OneInf},
      {{4, 5}, BoundaryCurve::ZeroOne},  {{7, 8}, BoundaryCurve::ZeroOne},
      {{10, 11}, BoundaryCurve::ZeroOne},{{13, 14}, BoundaryCurve::ZeroOne},
      {{3, 5}, BoundaryCurve::ZeroInf},  {{6, 7}, BoundaryCurve::ZeroInf},
      {{9, 11}, BoundaryCurve::ZeroInf}, {{12, 13}, BoundaryCurve::ZeroInf},
  };
  return t;
}

} // namespace dmwb
