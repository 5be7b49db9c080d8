#pragma once

#include "cuspeta/rational.hpp"

namespace cuspeta {

/// Twist parameter: the rational c in [0,1) by which the central lattice
/// generator acts as e^{2*pi*i*c} in an irreducible unitary representation.
class TwistParameter {
public:
  TwistParameter() : value_(0) {}
  explicit TwistParameter(Rational c) : value_(std::move(c)) {
    if (value_ < Rational(0) || value_ >= Rational(1))
      throw std::invalid_argument("TwistParameter: value must satisfy 0 <= c < 1, got " +
                                  toString(value_));
  }

  const Rational &value() const { return value_; }
  bool isTrivial() const { return value_.isZero(); }

  /// c -> 1-c, with 0 fixed (the zeta_0 := zeta convention makes 0 and 1
  /// interchangeable as Hurwitz parameters).
  TwistParameter mirrored() const {
    return isTrivial() ? TwistParameter() : TwistParameter(Rational(1) - value_);
  }

  friend bool operator==(const TwistParameter &a, const TwistParameter &b) {
    return a.value_ == b.value_;
  }

private:
  Rational value_;
};

/// n-th Bernoulli number, with the B_1 = -1/2 convention.
Rational bernoulliNumber(int n);

/// Bernoulli polynomial B_n(c), exact.
Rational bernoulliPoly(int n, const Rational &c);

/// Hurwitz zeta at non-positive integers: zeta_c(1-n) for n >= 1 and
/// 0 <= c < 1, exact. Computed as -B_n(c')/n where c' = c for c > 0 and
/// c' = 1 for c = 0 (zeta_0 := zeta, the Riemann zeta function).
Rational hurwitzZetaNeg(int n, const Rational &c);
Rational hurwitzZetaNeg(int n, const TwistParameter &c);

/// Direct summation of zeta_c(s) = sum_{k>=0} (k+c')^{-s} for real s > 1,
/// truncated once the integral-comparison tail bound drops below tol.
double hurwitzZetaSeries(double s, const Rational &c, double tol);

} // namespace cuspeta
