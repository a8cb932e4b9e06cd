#pragma once

#include <cmath>
#include <numeric>
#include <vector>

#include "dmwb/errors.hpp"
#include "dmwb/triangle_groups.hpp"

namespace dmwb {

/// Takeuchi's arithmeticity criterion for a hyperbolic triangle group
/// Delta(a,b,c).
///
/// Let k = Q(cos 2pi/a, cos 2pi/b, cos 2pi/c, cos pi/a cos pi/b cos pi/c) and
///   T = cos^2 pi/a + cos^2 pi/b + cos^2 pi/c
///       + 2 cos pi/a cos pi/b cos pi/c - 1            (T > 0 iff hyperbolic).
/// The group is arithmetic iff every real embedding that moves k sends T to a
/// negative number.  Embeddings are enumerated on the cyclotomic field
/// Q(zeta_N), N = 2 lcm(a,b,c), as zeta -> zeta^j with gcd(j,N) = 1; such an
/// embedding fixes k exactly when j = +-1 mod each finite entry and the
/// triple product is unchanged.  An infinite entry contributes cos 0 = 1 and
/// never moves.
///
/// Sign checks run in doubles; the conjugate values that occur here are
/// bounded away from zero by far more than the 1e-9 guard.
inline bool takeuchi_arithmetic(const TriangleSignature& sig) {
  if (!sig.valid() || !is_hyperbolic(sig))
    throw NotHyperbolic("arithmeticity criterion needs a hyperbolic signature");

  constexpr double kPi = 3.14159265358979323846;
  constexpr double kEps = 1e-9;

  std::vector<long long> finite;
  for (const ExtOrder& e : sig.entries)
    if (!e.is_infinite()) finite.push_back(e.value().numerator());

  long long n = 2;
  for (long long f : finite) n = std::lcm(n, f);

  auto cos_pi_over = [&](long long j, int idx) {
    const ExtOrder& e = sig.entries[idx];
    if (e.is_infinite()) return 1.0;
    return std::cos(kPi * static_cast<double>(j) / static_cast<double>(e.value().numerator()));
  };
  auto conjugate_t = [&](long long j) {
    double c0 = cos_pi_over(j, 0), c1 = cos_pi_over(j, 1), c2 = cos_pi_over(j, 2);
    return c0 * c0 + c1 * c1 + c2 * c2 + 2.0 * c0 * c1 * c2 - 1.0;
  };
  const double base_product = cos_pi_over(1, 0) * cos_pi_over(1, 1) * cos_pi_over(1, 2);

  for (long long j = 1; j < 2 * n; ++j) {
    if (std::gcd(j, 2 * n) != 1) continue;
    bool fixes = true;
    for (long long f : finite) {
      long long r = j % f;
      if (r != 1 % f && r != (f - 1) % f) { fixes = false; break; }
    }
    if (fixes) {
      double prod = cos_pi_over(j, 0) * cos_pi_over(j, 1) * cos_pi_over(j, 2);
      fixes = std::abs(prod - base_product) < kEps;
    }
    if (fixes) continue;
    double t = conjugate_t(j);
    if (std::abs(t) < kEps)
      throw Error("ambiguous conjugate sign for " + sig.str());
    if (t > 0.0) return false;
  }
  return true;
}

} // namespace dmwb
