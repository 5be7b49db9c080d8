#include "cuspeta/rational.hpp"

#include <cctype>
#include <cmath>
#include <ostream>
#include <sstream>

namespace cuspeta {

void Rational::normalize() {
  if (den_ == 0) throw std::domain_error("Rational: zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  Integer g = boost::multiprecision::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

std::ostream &operator<<(std::ostream &os, const Rational &r) {
  os << r.num_;
  if (r.den_ != 1) os << '/' << r.den_;
  return os;
}

std::ostream &operator<<(std::ostream &os, const GaussianRational &z) {
  if (z.im.isZero()) return os << z.re;
  os << '(' << z.re << (z.im.sign() < 0 ? "-" : "+") << abs(z.im) << "i)";
  return os;
}

Rational abs(const Rational &r) { return r.sign() < 0 ? -r : r; }

Rational pow(const Rational &base, long exp) {
  if (exp == 0) return Rational(1);
  if (exp < 0) {
    if (base.isZero()) throw std::domain_error("Rational: 0 to a negative power");
    return pow(Rational(1) / base, -exp);
  }
  Rational acc(1), b = base;
  long e = exp;
  while (e > 0) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  return acc;
}

double toDouble(const Rational &r) {
  return r.num().convert_to<double>() / r.den().convert_to<double>();
}

std::string toString(const Rational &r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

Rational parseRational(std::string_view text) {
  auto fail = [&] {
    throw std::invalid_argument("invalid rational \"" + std::string(text) +
                                "\": expected \"p\" or \"p/q\"");
  };
  size_t begin = text.find_first_not_of(" \t");
  size_t end = text.find_last_not_of(" \t");
  if (begin == std::string_view::npos) fail();
  std::string_view body = text.substr(begin, end - begin + 1);

  auto parseInt = [&](std::string_view s) -> Integer {
    if (s.empty()) fail();
    size_t pos = 0;
    bool neg = false;
    if (s[pos] == '+' || s[pos] == '-') {
      neg = s[pos] == '-';
      ++pos;
    }
    if (pos == s.size()) fail();
    Integer value = 0;
    for (; pos < s.size(); ++pos) {
      if (!std::isdigit(static_cast<unsigned char>(s[pos]))) fail();
      value = value * 10 + (s[pos] - '0');
    }
    return neg ? Integer(-value) : value;
  };

  size_t slash = body.find('/');
  if (slash == std::string_view::npos) return Rational(parseInt(body));
  Integer num = parseInt(body.substr(0, slash));
  Integer den = parseInt(body.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("invalid rational \"" + std::string(text) +
                                            "\": zero denominator");
  return Rational(std::move(num), std::move(den));
}

Rational approximateRational(double x, long maxDen) {
  if (maxDen < 1) throw std::invalid_argument("approximateRational: maxDen must be >= 1");
  // Continued fraction expansion with convergents p/q, q <= maxDen.
  long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double value = x;
  for (int iter = 0; iter < 64; ++iter) {
    const double floorValue = std::floor(value);
    const auto a = static_cast<long>(floorValue);
    const long p2 = a * p1 + p0, q2 = a * q1 + q0;
    if (q2 > maxDen || q2 < 0) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    const double rem = value - floorValue;
    if (rem < 1e-15) break;
    value = 1.0 / rem;
  }
  if (q1 == 0) return Rational(Integer(p0), Integer(q0));
  return Rational(Integer(p1), Integer(q1));
}

Integer factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  Integer acc = 1;
  for (int k = 2; k <= n; ++k) acc *= k;
  return acc;
}

Integer binomial(int n, int k) {
  if (n < 0) throw std::invalid_argument("binomial: negative n");
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Integer acc = 1;
  for (int j = 1; j <= k; ++j) {
    acc *= n - k + j;
    acc /= j;
  }
  return acc;
}

} // namespace cuspeta
