#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace cuspeta {

using Integer = boost::multiprecision::cpp_int;

/// Exact rational number over arbitrary-precision integers.
/// Invariants: stored in lowest terms, denominator > 0. All arithmetic is
/// exact; there is no implicit conversion to or from floating point.
class Rational {
public:
  Rational() : num_(0), den_(1) {}
  Rational(int value) : num_(value), den_(1) {}
  Rational(long value) : num_(value), den_(1) {}
  Rational(long long value) : num_(value), den_(1) {}
  Rational(Integer value) : num_(std::move(value)), den_(1) {}
  Rational(Integer num, Integer den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

  const Integer &num() const { return num_; }
  const Integer &den() const { return den_; }

  bool isZero() const { return num_ == 0; }
  bool isInteger() const { return den_ == 1; }
  int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

  friend Rational operator+(const Rational &a, const Rational &b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational &a, const Rational &b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational &a, const Rational &b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational &a, const Rational &b) {
    if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }
  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  Rational &operator+=(const Rational &o) { return *this = *this + o; }
  Rational &operator-=(const Rational &o) { return *this = *this - o; }
  Rational &operator*=(const Rational &o) { return *this = *this * o; }
  Rational &operator/=(const Rational &o) { return *this = *this / o; }

  friend bool operator==(const Rational &a, const Rational &b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational &a, const Rational &b) { return !(a == b); }
  friend bool operator<(const Rational &a, const Rational &b) {
    Integer lhs = a.num_ * b.den_, rhs = b.num_ * a.den_;
    return lhs < rhs;
  }
  friend bool operator>(const Rational &a, const Rational &b) { return b < a; }
  friend bool operator<=(const Rational &a, const Rational &b) { return !(b < a); }
  friend bool operator>=(const Rational &a, const Rational &b) { return !(a < b); }

  friend std::ostream &operator<<(std::ostream &os, const Rational &r);

private:
  void normalize();

  Integer num_, den_;
};

Rational abs(const Rational &r);
/// Integer power; exponent may be negative for nonzero base.
Rational pow(const Rational &base, long exp);
double toDouble(const Rational &r);

/// Renders as "p/q", or just "p" when the denominator is 1.
std::string toString(const Rational &r);
/// Parses "p/q" or "p" with optional leading sign. Decimal input is refused.
Rational parseRational(std::string_view text);
/// Best rational approximation with denominator <= maxDen (continued
/// fractions); float-path helper only.
Rational approximateRational(double x, long maxDen);

/// Gaussian rational a + b*i. Arithmetic is exact.
struct GaussianRational {
  Rational re, im;

  GaussianRational() = default;
  GaussianRational(int value) : re(value) {}
  GaussianRational(Rational real) : re(std::move(real)) {}
  GaussianRational(Rational real, Rational imag) : re(std::move(real)), im(std::move(imag)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  bool isZero() const { return re.isZero() && im.isZero(); }
  bool isReal() const { return im.isZero(); }

  friend GaussianRational operator+(const GaussianRational &a, const GaussianRational &b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational &a, const GaussianRational &b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator-(const GaussianRational &a) { return {-a.re, -a.im}; }
  friend GaussianRational operator*(const GaussianRational &a, const GaussianRational &b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussianRational operator*(const GaussianRational &a, const Rational &b) {
    return {a.re * b, a.im * b};
  }
  friend GaussianRational operator*(const Rational &a, const GaussianRational &b) { return b * a; }
  friend GaussianRational operator/(const GaussianRational &a, const GaussianRational &b) {
    Rational n = b.re * b.re + b.im * b.im;
    if (n.isZero()) throw std::domain_error("GaussianRational: division by zero");
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
  }
  GaussianRational &operator+=(const GaussianRational &o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussianRational &operator-=(const GaussianRational &o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussianRational &operator*=(const GaussianRational &o) { return *this = *this * o; }
  GaussianRational &operator/=(const GaussianRational &o) { return *this = *this / o; }

  friend bool operator==(const GaussianRational &a, const GaussianRational &b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianRational &a, const GaussianRational &b) { return !(a == b); }

  friend std::ostream &operator<<(std::ostream &os, const GaussianRational &z);
};

inline GaussianRational conj(const GaussianRational &z) { return {z.re, -z.im}; }
inline Rational real(const GaussianRational &z) { return z.re; }
inline Rational imag(const GaussianRational &z) { return z.im; }
inline Rational abs2(const GaussianRational &z) { return z.re * z.re + z.im * z.im; }

Integer factorial(int n);
/// Binomial coefficient C(n, k); zero for k < 0 or k > n.
Integer binomial(int n, int k);

} // namespace cuspeta
