#pragma once

#include <compare>
#include <string>

#include "dmwb/errors.hpp"
#include "dmwb/rational.hpp"

namespace dmwb {

/// A ramification / reflection order: a nonzero exact rational, or infinity.
///
/// Conventions: a negative order marks a divisor that is blown down to a
/// point, an infinite order marks a cusp divisor.  Zero is not a value of
/// this type; it only appears as the reciprocal of infinity.
class ExtOrder {
public:
  static ExtOrder infinity() { return ExtOrder(true, Rational(0)); }

  static ExtOrder of(const Rational& q) {
    if (q == Rational(0)) throw NonPositiveOrder("order 0 is not admissible");
    return ExtOrder(false, q);
  }

  static ExtOrder of(long long n) { return of(Rational(n)); }

  /// Inverse of reciprocal(): 0 maps to infinity, r maps to 1/r.
  static ExtOrder from_reciprocal(const Rational& r) {
    if (r == Rational(0)) return infinity();
    return ExtOrder(false, Rational(1) / r);
  }

  bool is_infinite() const { return infinite_; }

  /// Finite value; call only when !is_infinite().
  const Rational& value() const { return value_; }

  /// reciprocal(inf) = 0, reciprocal(q) = 1/q.  Together with
  /// from_reciprocal this is an involution extended by 0 <-> inf.
  Rational reciprocal() const {
    return infinite_ ? Rational(0) : Rational(1) / value_;
  }

  ExtOrder doubled() const {
    return infinite_ ? infinity() : ExtOrder(false, Rational(2) * value_);
  }

  bool is_positive() const { return infinite_ || value_ > Rational(0); }
  bool is_negative() const { return !infinite_ && value_ < Rational(0); }
  bool is_positive_integer() const {
    return !infinite_ && value_ > Rational(0) && is_integer(value_);
  }
  /// Positive integer or infinity: the entries a valid triangle signature allows.
  bool is_admissible_signature_entry() const {
    return infinite_ || is_positive_integer();
  }

  friend bool operator==(const ExtOrder& a, const ExtOrder& b) {
    if (a.infinite_ != b.infinite_) return false;
    return a.infinite_ || a.value_ == b.value_;
  }
  friend bool operator!=(const ExtOrder& a, const ExtOrder& b) { return !(a == b); }

  /// Total order: finite values numerically, infinity greatest.
  friend bool operator<(const ExtOrder& a, const ExtOrder& b) {
    if (a.infinite_) return false;
    if (b.infinite_) return true;
    return a.value_ < b.value_;
  }

  std::string str() const { return infinite_ ? "inf" : to_string(value_); }

  static ExtOrder parse(const std::string& text) {
    if (text == "inf" || text == "Inf" || text == "INF") return infinity();
    return of(parse_rational(text));
  }

private:
  ExtOrder(bool infinite, const Rational& value) : infinite_(infinite), value_(value) {}

  bool infinite_;
  Rational value_;
};

} // namespace dmwb
