#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>

#include "dmwb/errors.hpp"

namespace dmwb {

/// Exact rational arithmetic.  All magnitudes in this domain are tiny
/// (numerators/denominators bounded by small products of table entries),
/// so a machine-word rational suffices.
using Rational = boost::rational<long long>;

inline Rational rat(long long num, long long den = 1) { return Rational(num, den); }

inline bool is_integer(const Rational& q) { return q.denominator() == 1; }

inline std::string to_string(const Rational& q) {
  std::string s = std::to_string(q.numerator());
  if (q.denominator() != 1) s += "/" + std::to_string(q.denominator());
  return s;
}

/// Parses "n" or "n/d".  Throws MalformedDataset on anything else.
inline Rational parse_rational(const std::string& text) {
  try {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(std::stoll(text));
    long long num = std::stoll(text.substr(0, slash));
    long long den = std::stoll(text.substr(slash + 1));
    if (den == 0) throw MalformedDataset("zero denominator in '" + text + "'");
    return Rational(num, den);
  } catch (const std::invalid_argument&) {
    throw MalformedDataset("not a rational: '" + text + "'");
  } catch (const std::out_of_range&) {
    throw MalformedDataset("rational out of range: '" + text + "'");
  }
}

} // namespace dmwb
