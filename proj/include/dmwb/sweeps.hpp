#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "dmwb/complex_projective.hpp"
#include "dmwb/errors.hpp"
#include "dmwb/fibration.hpp"
#include "dmwb/mat3.hpp"
#include "dmwb/projective.hpp"

namespace dmwb {

/// Deterministic seeded generator.  Draws are independent of the standard
/// library's distribution implementations, so identical seeds give identical
/// sweeps everywhere.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : g_(seed) {}

  double unit() { return static_cast<double>(g_() >> 11) * 0x1.0p-53; }
  double range(double a, double b) { return a + (b - a) * unit(); }
  Complex box(double r) { return {range(-r, r), range(-r, r)}; }
  std::uint64_t integer(std::uint64_t n) { return g_() % n; }

private:
  std::mt19937_64 g_;
};

/// Sampling window for the cone angles: 0 < phi < theta < pi/2, margins kept
/// away from the degenerate sines.
inline std::pair<double, double> sample_cone_angles(Rng& rng) {
  double theta = rng.range(0.25, 1.52);
  double phi = theta * rng.range(0.08, 0.92);
  return {theta, phi};
}

// ---------------------------------------------------------------------------
// Singular fibres
// ---------------------------------------------------------------------------

struct SingularFiberReport {
  std::size_t samples_per_line;
  double max_distance;      // float route
  std::size_t exact_failures;  // rational route
  bool pass(double tol) const { return max_distance < tol && exact_failures == 0; }
};

/// Seeded random points on each line of the three singular fibres must map to
/// the paired marked point: float route within tolerance, rational route
/// exactly.
inline SingularFiberReport singular_fiber_sweep(std::uint64_t seed, std::size_t samples_per_line) {
  struct LineCase {
    CP1 marked;
    // rational parametrization [x(t) : y(t) : z(t)] with entries 0, 1 or t
    std::array<int, 3> pattern;  // 0 -> 0, 1 -> 1, 2 -> t
    Rational forbidden;          // parameter hitting a base point
  };
  // l01: [0:1:t], l23: [t:1:1] (t=1 is p4); l02: [t:0:1], l13: [1:t:1] (t=1 is p4);
  // l03: [t:1:0], l12: [1:1:t] (t=1 is p4).
  const std::vector<LineCase> cases = {
      {marked_point_10(), {0, 1, 2}, Rational(0)}, {marked_point_10(), {2, 1, 1}, Rational(1)},
      {marked_point_01(), {2, 0, 1}, Rational(0)}, {marked_point_01(), {1, 2, 1}, Rational(1)},
      {marked_point_11(), {2, 1, 0}, Rational(0)}, {marked_point_11(), {1, 1, 2}, Rational(1)},
  };

  Rng rng(seed);
  SingularFiberReport report{samples_per_line, 0.0, 0};
  for (const LineCase& lc : cases) {
    for (std::size_t s = 0; s < samples_per_line; ++s) {
      // float route: complex parameter in an annulus, away from base points
      Complex t;
      do {
        t = rng.box(2.0);
      } while (std::abs(t) < 0.2 || std::abs(t - Complex(1.0, 0.0)) < 0.2);
      std::array<Complex, 3> z{};
      for (int i = 0; i < 3; ++i) z[i] = lc.pattern[i] == 2 ? t : Complex(lc.pattern[i], 0.0);
      CP1 image = eval_fibration(CP2Pt{z});
      report.max_distance = std::max(report.max_distance, proj_distance(image, lc.marked));

      // rational route: small random fraction, exact equality
      long long num = static_cast<long long>(rng.integer(199)) - 99;
      long long den = 1 + static_cast<long long>(rng.integer(32));
      Rational tq(num, den);
      if (tq == Rational(0) || tq == lc.forbidden || tq == Rational(1)) tq = Rational(7, 3);
      std::array<Rational, 3> zr{};
      for (int i = 0; i < 3; ++i) zr[i] = lc.pattern[i] == 2 ? tq : Rational(lc.pattern[i]);
      auto pair = eval_fibration_exact(ProjPoint(zr[0], zr[1], zr[2]));
      // exact projective equality with the marked point
      Rational m0(lc.marked.v[0].real() == 1.0 ? 1 : 0);
      Rational m1(lc.marked.v[1].real() == 1.0 ? 1 : 0);
      if (pair[0] * m1 - pair[1] * m0 != Rational(0)) ++report.exact_failures;
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Cross-ratio composite (P1)
// ---------------------------------------------------------------------------

struct CrossRatioReport {
  std::size_t samples;
  double max_rel_error;
  bool pass(double tol) const { return max_rel_error < tol; }
};

/// The z-coordinate fibration against the z'-composite
/// [(z1'-z3')/z1' : (z2'-z3')/z2'] on seeded random inputs.
inline CrossRatioReport crossratio_sweep(std::uint64_t seed, std::size_t samples) {
  Rng rng(seed);
  CrossRatioReport report{samples, 0.0};
  std::size_t accepted = 0;
  while (accepted < samples) {
    auto [theta, phi] = sample_cone_angles(rng);
    std::array<Complex, 3> z = {rng.box(1.0), rng.box(1.0), rng.box(1.0)};
    try {
      ExtendedComplex f = f_z(z, theta, phi);
      if (f.infinite || std::abs(f.value) > 1e6) continue;
      auto zp = zprime_coords(z, theta, phi);
      if (std::abs(zp[0]) < 1e-8 || std::abs(zp[1]) < 1e-8) continue;
      Complex num = (zp[0] - zp[2]) / zp[0];
      Complex den = (zp[1] - zp[2]) / zp[1];
      if (std::abs(den) < 1e-8) continue;
      Complex comp = num / den;
      double err = std::abs(comp - f.value) /
                   std::max({1.0, std::abs(comp), std::abs(f.value)});
      report.max_rel_error = std::max(report.max_rel_error, err);
      ++accepted;
    } catch (const Error&) {
      continue;  // degenerate draw; the seeded stream continues deterministically
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Zero/one/infinity loci of f_z form a complete quadrilateral
// ---------------------------------------------------------------------------

namespace detail {

using LineVec = std::array<Complex, 3>;

inline LineVec cross3(const LineVec& a, const LineVec& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

inline double vec_norm(const LineVec& a) {
  return std::sqrt(std::norm(a[0]) + std::norm(a[1]) + std::norm(a[2]));
}

/// Splits a rank-2 symmetric quadratic form into two linear factors.
inline std::pair<LineVec, LineVec> split_line_pair(const Mat3& q) {
  // kernel direction: best cross product of two rows
  LineVec rows[3] = {{q.a[0][0], q.a[0][1], q.a[0][2]},
                     {q.a[1][0], q.a[1][1], q.a[1][2]},
                     {q.a[2][0], q.a[2][1], q.a[2][2]}};
  LineVec kernel{};
  double best = -1.0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      LineVec c = cross3(rows[i], rows[j]);
      if (vec_norm(c) > best) { best = vec_norm(c); kernel = c; }
    }
  if (best <= 1e-12) throw Error("quadratic form has rank < 2");

  // complete {e_a, e_b, kernel} to a basis, dropping the largest kernel axis
  int drop = 0;
  for (int i = 1; i < 3; ++i)
    if (std::abs(kernel[i]) > std::abs(kernel[drop])) drop = i;
  std::array<int, 2> keep{};
  int n = 0;
  for (int i = 0; i < 3; ++i)
    if (i != drop) keep[n++] = i;

  Mat3 basis;  // columns u, v, kernel
  for (int i = 0; i < 3; ++i) {
    basis.a[i][0] = i == keep[0] ? 1.0 : 0.0;
    basis.a[i][1] = i == keep[1] ? 1.0 : 0.0;
    basis.a[i][2] = kernel[i];
  }
  Mat3 dual = inverse(basis);  // rows: functionals s, t, r
  LineVec fs = {dual.a[0][0], dual.a[0][1], dual.a[0][2]};
  LineVec ft = {dual.a[1][0], dual.a[1][1], dual.a[1][2]};

  // Q restricted to span(u, v): alpha s^2 + beta s t + gamma t^2
  Complex alpha = q.a[keep[0]][keep[0]];
  Complex beta = q.a[keep[0]][keep[1]] + q.a[keep[1]][keep[0]];
  Complex gamma = q.a[keep[1]][keep[1]];

  auto combine = [&](const Complex& cs, const Complex& ct) {
    LineVec out{};
    for (int i = 0; i < 3; ++i) out[i] = cs * fs[i] + ct * ft[i];
    return out;
  };
  double scale = std::max({std::abs(alpha), std::abs(beta), std::abs(gamma)});
  if (std::abs(alpha) > 1e-10 * scale) {
    Complex disc = std::sqrt(beta * beta - 4.0 * alpha * gamma);
    Complex x1 = (-beta + disc) / (2.0 * alpha);
    Complex x2 = (-beta - disc) / (2.0 * alpha);
    return {combine(1.0, -x1), combine(1.0, -x2)};
  }
  if (std::abs(gamma) > 1e-10 * scale) {
    Complex disc = std::sqrt(beta * beta - 4.0 * alpha * gamma);
    Complex y1 = (-beta + disc) / (2.0 * gamma);
    Complex y2 = (-beta - disc) / (2.0 * gamma);
    return {combine(-y1, 1.0), combine(-y2, 1.0)};
  }
  return {fs, ft};  // pure beta s t
}

inline Mat3 symmetric_product(const LineVec& a, const LineVec& b) {
  Mat3 m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m.a[i][j] = (a[i] * b[j] + a[j] * b[i]) / 2.0;
  return m;
}

} // namespace detail

struct LociReport {
  std::size_t trials;
  std::size_t failures;
  double max_split_residual;  // |det| of the one-locus form, relative
  bool pass() const { return failures == 0; }
};

/// For seeded (theta, phi): the 0, 1 and infinity loci of f_z are unions of
/// two lines each, and the six lines meet in 4 triple and 3 double points.
inline LociReport loci_sweep(std::uint64_t seed, std::size_t trials) {
  using detail::LineVec;
  Rng rng(seed);
  LociReport report{trials, 0, 0.0};
  for (std::size_t trial = 0; trial < trials; ++trial) {
    auto [theta, phi] = sample_cone_angles(rng);
    const double st = std::sin(theta), sp = std::sin(phi);
    const double s = sp + std::sin(theta - phi);
    const Complex i(0.0, 1.0);
    const Complex eith = std::exp(i * theta);

    LineVec zero1 = {-st * std::exp(i * phi), Complex(-s), Complex(s)};
    LineVec zero2 = {Complex(1.0), std::exp(-i * theta), Complex(-1.0)};
    LineVec inf1 = {Complex(1.0), Complex(0.0), Complex(0.0)};
    LineVec inf2 = {Complex(0.0), Complex(1.0), Complex(0.0)};

    // one-locus: numerator - denominator as a symmetric form
    Mat3 q = detail::symmetric_product(zero1, zero2);
    Complex den_coeff = -sp * (1.0 - eith) * (1.0 - std::exp(-i * theta));
    q.a[0][1] -= den_coeff / 2.0;
    q.a[1][0] -= den_coeff / 2.0;

    double det_resid = std::abs(q.det()) / std::pow(q.max_abs(), 3);
    report.max_split_residual = std::max(report.max_split_residual, det_resid);

    bool ok = det_resid < 1e-9;
    std::array<LineVec, 6> lines{};
    if (ok) {
      auto [one1, one2] = detail::split_line_pair(q);
      lines = {zero1, zero2, inf1, inf2, one1, one2};

      // cluster the 15 pairwise intersections
      std::vector<CP2Pt> points;
      std::vector<int> members;  // lines-through count per cluster (as pairs)
      for (int a = 0; a < 6 && ok; ++a)
        for (int b = a + 1; b < 6; ++b) {
          LineVec x = detail::cross3(lines[a], lines[b]);
          if (detail::vec_norm(x) < 1e-10) { ok = false; break; }
          CP2Pt pt{{x[0], x[1], x[2]}};
          bool found = false;
          for (std::size_t c = 0; c < points.size(); ++c) {
            if (proj_distance(points[c], pt) < 1e-6) {
              ++members[c];
              found = true;
              break;
            }
          }
          if (!found) {
            points.push_back(pt.normalized());
            members.push_back(1);
          }
        }
      if (ok) {
        // 4 triple points contribute 3 pairs each, 3 double points 1 pair each
        std::sort(members.begin(), members.end());
        ok = members == std::vector<int>{1, 1, 1, 3, 3, 3, 3};
      }
    }
    if (!ok) ++report.failures;
  }
  return report;
}

// ---------------------------------------------------------------------------
// Forgetful square
// ---------------------------------------------------------------------------

struct ForgetfulReport {
  std::size_t samples;
  double max_route_distance;   // eval_fibration(top) vs bottom
  double max_moebius_distance; // invariance under a common Moebius map
  bool pass(double tol) const { return max_route_distance < tol; }
};

inline ForgetfulReport forgetful_sweep(std::uint64_t seed, std::size_t samples) {
  Rng rng(seed);
  ForgetfulReport report{samples, 0.0, 0.0};
  std::size_t accepted = 0;
  while (accepted < samples) {
    std::array<Complex, 5> xs{};
    bool distinct = true;
    for (int i = 0; i < 5; ++i) {
      xs[i] = rng.box(2.0);
      for (int j = 0; j < i; ++j) distinct = distinct && std::abs(xs[i] - xs[j]) > 0.1;
    }
    if (!distinct) continue;
    FiveConfig cfg = FiveConfig::affine(xs);

    CP1 via_plane = eval_fibration(forgetful_top(cfg));
    CP1 direct = forgetful_bottom({cfg.pts[0], cfg.pts[1], cfg.pts[2], cfg.pts[3]});
    report.max_route_distance =
        std::max(report.max_route_distance, proj_distance(via_plane, direct));

    // both routes are invariant under a common Moebius map of all five points
    Complex a = rng.box(1.5), b = rng.box(1.5), c = rng.box(1.5), d = rng.box(1.5);
    if (std::abs(a * d - b * c) < 0.3) continue;
    std::array<CP1, 5> moved{};
    for (int i = 0; i < 5; ++i)
      moved[i] = CP1{{a * cfg.pts[i].v[0] + b * cfg.pts[i].v[1],
                      c * cfg.pts[i].v[0] + d * cfg.pts[i].v[1]}};
    try {
      FiveConfig mcfg = FiveConfig::of(moved);
      CP1 via_plane_m = eval_fibration(forgetful_top(mcfg));
      CP1 direct_m = forgetful_bottom({mcfg.pts[0], mcfg.pts[1], mcfg.pts[2], mcfg.pts[3]});
      report.max_moebius_distance = std::max(
          {report.max_moebius_distance, proj_distance(via_plane_m, via_plane),
           proj_distance(direct_m, direct)});
    } catch (const Error&) {
      continue;
    }
    ++accepted;
  }
  return report;
}

// ---------------------------------------------------------------------------
// Endpoints of the edge gamma_{3,4}
// ---------------------------------------------------------------------------

struct Gamma34Report {
  std::size_t trials;
  double max_endpoint_error;  // |value at u_max - 1|
  double min_pole_modulus;    // |value| near u = 0
  bool pass(double tol, double divergence = 1e6) const {
    return max_endpoint_error < tol && min_pole_modulus > divergence;
  }
};

/// Seeded (theta, phi) in the regime 2cos(theta) > 1: the edge projects to 1
/// at u = u_max and blows up towards [1:0] as u -> 0+.
inline Gamma34Report gamma34_sweep(std::uint64_t seed, std::size_t trials) {
  Rng rng(seed);
  Gamma34Report report{trials, 0.0, 1e300};
  for (std::size_t t = 0; t < trials; ++t) {
    double theta = rng.range(0.15, 1.02);  // 2cos(theta) > 1
    double phi = theta * rng.range(0.1, 0.9);
    double umax = gamma34_u_max(theta, phi);
    Complex at_end = gamma34_projection(umax, theta, phi);
    report.max_endpoint_error =
        std::max(report.max_endpoint_error, std::abs(at_end - Complex(1.0, 0.0)));
    Complex near_pole = gamma34_projection(umax * 1e-9, theta, phi);
    report.min_pole_modulus = std::min(report.min_pole_modulus, std::abs(near_pole));
  }
  return report;
}

} // namespace dmwb
