#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <string>

#include "dmwb/errors.hpp"

namespace dmwb {

using Complex = std::complex<double>;

/// A point of complex projective space in double precision, up to scale.
/// normalized() divides by the coordinate of largest modulus, so that
/// coordinate becomes exactly 1; projective distance is the norm of the 2x2
/// minors of normalized representatives.
template <std::size_t N>
struct CPoint {
  std::array<Complex, N> v;

  CPoint normalized() const {
    std::size_t best = 0;
    for (std::size_t i = 1; i < N; ++i)
      if (std::abs(v[i]) > std::abs(v[best])) best = i;
    if (std::abs(v[best]) == 0.0) throw Error("zero vector is not projective");
    CPoint out = *this;
    Complex pivot = v[best];
    for (auto& c : out.v) c /= pivot;
    return out;
  }

  std::string str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < N; ++i) {
      if (i) s += " : ";
      s += std::to_string(v[i].real());
      if (v[i].imag() != 0.0) s += (v[i].imag() < 0 ? "-" : "+") +
                                   std::to_string(std::abs(v[i].imag())) + "i";
    }
    return s + "]";
  }
};

using CP1 = CPoint<2>;  // points of the projective line (fibre parameters)
using CP2Pt = CPoint<3>;  // points of the projective plane

template <std::size_t N>
inline double proj_distance(const CPoint<N>& a, const CPoint<N>& b) {
  CPoint<N> x = a.normalized();
  CPoint<N> y = b.normalized();
  double s = 0.0;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i + 1; j < N; ++j) {
      Complex m = x.v[i] * y.v[j] - x.v[j] * y.v[i];
      s += std::norm(m);
    }
  return std::sqrt(s);
}

template <std::size_t N>
inline bool projectively_equal(const CPoint<N>& a, const CPoint<N>& b, double tol = 1e-9) {
  return proj_distance(a, b) < tol;
}

} // namespace dmwb
