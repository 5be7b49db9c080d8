#include "cuspeta/zeta.hpp"

#include <cmath>
#include <mutex>
#include <vector>

namespace cuspeta {

namespace {

std::mutex bernoulliMutex;
std::vector<Rational> bernoulliCache; // guarded by bernoulliMutex

// Pascal recurrence: sum_{k=0}^{m} C(m+1,k) B_k = 0 for m >= 1.
void extendBernoulliCache(int n) {
  if (bernoulliCache.empty()) bernoulliCache.push_back(Rational(1));
  for (int m = static_cast<int>(bernoulliCache.size()); m <= n; ++m) {
    Rational sum(0);
    for (int k = 0; k < m; ++k) sum += Rational(binomial(m + 1, k)) * bernoulliCache[k];
    bernoulliCache.push_back(-sum / Rational(m + 1));
  }
}

} // namespace

Rational bernoulliNumber(int n) {
  if (n < 0) throw std::invalid_argument("bernoulliNumber: negative index");
  std::lock_guard<std::mutex> lock(bernoulliMutex);
  extendBernoulliCache(n);
  return bernoulliCache[n];
}

Rational bernoulliPoly(int n, const Rational &c) {
  if (n < 0) throw std::invalid_argument("bernoulliPoly: negative index");
  std::vector<Rational> numbers;
  {
    std::lock_guard<std::mutex> lock(bernoulliMutex);
    extendBernoulliCache(n);
    numbers.assign(bernoulliCache.begin(), bernoulliCache.begin() + n + 1);
  }
  // B_n(c) = sum_k C(n,k) B_k c^{n-k}, evaluated by Horner in c.
  Rational acc(0);
  for (int k = 0; k <= n; ++k) {
    acc *= c;
    acc += Rational(binomial(n, k)) * numbers[k];
  }
  return acc;
}

Rational hurwitzZetaNeg(int n, const Rational &c) {
  if (n < 1) throw std::invalid_argument("hurwitzZetaNeg: index must be >= 1");
  if (c < Rational(0) || c >= Rational(1))
    throw std::invalid_argument("hurwitzZetaNeg: parameter must satisfy 0 <= c < 1");
  const Rational shifted = c.isZero() ? Rational(1) : c;
  return -bernoulliPoly(n, shifted) / Rational(n);
}

Rational hurwitzZetaNeg(int n, const TwistParameter &c) { return hurwitzZetaNeg(n, c.value()); }

double hurwitzZetaSeries(double s, const Rational &c, double tol) {
  if (!(s > 1.0)) throw std::invalid_argument("hurwitzZetaSeries: series diverges for s <= 1");
  if (!(tol > 0.0)) throw std::invalid_argument("hurwitzZetaSeries: tolerance must be positive");
  if (c < Rational(0) || c >= Rational(1))
    throw std::invalid_argument("hurwitzZetaSeries: parameter must satisfy 0 <= c < 1");
  const double offset = c.isZero() ? 1.0 : toDouble(c);
  double sum = 0.0;
  // Tail from k on is bounded by (k-1+offset)^{1-s}/(s-1).
  for (long k = 0;; ++k) {
    sum += std::pow(k + offset, -s);
    if (k >= 1 && std::pow(k + offset, 1.0 - s) / (s - 1.0) <= tol) break;
    if (k > 200'000'000)
      throw std::runtime_error("hurwitzZetaSeries: tolerance unreachable at this s");
  }
  return sum;
}

} // namespace cuspeta
