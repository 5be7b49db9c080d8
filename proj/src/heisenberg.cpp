#include "cuspeta/heisenberg.hpp"

#include "cuspeta/clifford.hpp"
#include "cuspeta/linalg.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace cuspeta {

namespace {

constexpr double kPi = std::numbers::pi;

void checkMetric(int n, const HeisenbergMetric &metric) {
  if (static_cast<int>(metric.rj.size()) != n)
    throw std::invalid_argument("HeisenbergMetric: expected n horizontal parameters");
  for (double r : metric.rj)
    if (!(r > 0.0)) throw std::invalid_argument("HeisenbergMetric: parameters must be positive");
  if (!(metric.r > 0.0)) throw std::invalid_argument("HeisenbergMetric: parameters must be positive");
}

Integer sectorMultiplicity(const LatticeType &d, const GammaRepData &rep, const Rational &w) {
  // |Gamma| dimV |w|^n; an integer because m_j d_j w is integral.
  const Rational m = Rational(d.order() * rep.dimV) * pow(abs(w), d.n());
  if (!m.isInteger()) throw std::logic_error("sector multiplicity is not integral");
  return m.num();
}

} // namespace

LatticeType::LatticeType(std::vector<int> d) : d_(std::move(d)) {
  if (d_.empty()) throw std::invalid_argument("LatticeType: empty type");
  for (size_t i = 0; i < d_.size(); ++i) {
    if (d_[i] < 1) throw std::invalid_argument("LatticeType: entries must be positive");
    if (i + 1 < d_.size() && d_[i + 1] % d_[i] != 0)
      throw std::invalid_argument("LatticeType: divisibility chain violated (d_i | d_{i+1})");
  }
}

Integer LatticeType::order() const {
  Integer acc = 1;
  for (int v : d_) acc *= v;
  return acc;
}

GammaRepData gammaRepData(const LatticeType &d, const TwistParameter &c) {
  GammaRepData out;
  out.c = c;
  out.dimV = 1;
  for (int dj : d.entries()) {
    const Rational cd = c.value() * Rational(dj);
    out.m.push_back(cd.den());
    out.dimV *= cd.den();
  }
  return out;
}

std::vector<SpectralItem> diracSquareSpectrum(int n, const LatticeType &d,
                                              const TwistParameter &c,
                                              const HeisenbergMetric &metric, double cutoff) {
  if (d.n() != n) throw std::invalid_argument("diracSquareSpectrum: lattice rank mismatch");
  checkMetric(n, metric);
  if (!(cutoff > 0.0)) throw std::invalid_argument("diracSquareSpectrum: cutoff must be positive");

  const GammaRepData rep = gammaRepData(d, c);
  std::vector<SpectralItem> items;

  auto enumerateSector = [&](const Rational &w) {
    const double wd = toDouble(w);
    const double base = 4.0 * kPi * kPi * wd * wd * metric.r * metric.r;
    if (base > cutoff) return false;
    const Integer mult = sectorMultiplicity(d, rep, w);
    const double scale = 2.0 * kPi * std::abs(wd);
    const int signW = wd > 0 ? 1 : -1;

    std::vector<int> p(static_cast<size_t>(n), 0), eps(static_cast<size_t>(n), 1);
    // Enumerate all (p, eps) with lambda <= cutoff, mode by mode.
    auto rec = [&](auto &&self, int mode, double partial) -> void {
      if (mode == n) {
        SpectralItem item;
        item.w = w;
        item.p = p;
        item.eps = eps;
        item.value = partial;
        item.multiplicity = mult;
        items.push_back(std::move(item));
        return;
      }
      const double rj2 = metric.rj[static_cast<size_t>(mode)] * metric.rj[static_cast<size_t>(mode)];
      for (int e : {-1, 1}) {
        eps[static_cast<size_t>(mode)] = e;
        for (int pj = 0;; ++pj) {
          const double term = scale * (2 * pj + 1 + e * signW) * rj2;
          if (partial + term > cutoff) break;
          p[static_cast<size_t>(mode)] = pj;
          self(self, mode + 1, partial + term);
        }
        p[static_cast<size_t>(mode)] = 0;
      }
    };
    rec(rec, 0, base);
    return true;
  };

  for (int m = 0;; ++m) { // w = c + m going up
    const Rational w = c.value() + Rational(m);
    if (w.isZero()) continue;
    if (!enumerateSector(w)) break;
  }
  for (int m = -1;; --m) { // w = c + m going down
    const Rational w = c.value() + Rational(m);
    if (w.isZero()) continue;
    if (!enumerateSector(w)) break;
  }

  std::sort(items.begin(), items.end(), [](const SpectralItem &a, const SpectralItem &b) {
    if (a.value != b.value) return a.value < b.value;
    return toDouble(a.w) < toDouble(b.w);
  });
  return items;
}

Rational etaClosed(int n, const LatticeType &d, const TwistParameter &c, const Integer &dimV,
                   int s) {
  if (d.n() != n) throw std::invalid_argument("etaClosed: lattice rank mismatch");
  if (s > 0) throw std::invalid_argument("etaClosed: exact values require s <= 0");
  const int zetaIndex = n + 1 - s; // zeta_c(s-n) = zeta_c(1 - (n+1-s))
  const Rational zc = hurwitzZetaNeg(zetaIndex, c);
  const Rational zm = hurwitzZetaNeg(zetaIndex, c.mirrored());
  const Rational prefactor = Rational(d.order() * dimV);
  return n % 2 == 0 ? prefactor * (zc - zm) : -prefactor * (zc + zm);
}

EtaSeriesResult etaSeries(int n, const LatticeType &d, const TwistParameter &c,
                          const Integer &dimV, const HeisenbergMetric &metric, double s,
                          int wMax) {
  if (d.n() != n) throw std::invalid_argument("etaSeries: lattice rank mismatch");
  checkMetric(n, metric);
  if (!(s > n + 1)) throw std::invalid_argument("etaSeries: series requires s > n+1");
  if (wMax < 1) throw std::invalid_argument("etaSeries: wMax must be >= 1");

  const double cv = toDouble(c.value());
  const bool even = n % 2 == 0;
  double sum = 0.0;
  for (long m = -wMax - 1; m <= wMax + 1; ++m) {
    const double w = cv + static_cast<double>(m);
    if (w == 0.0 || std::abs(w) > wMax) continue;
    const double term = std::pow(std::abs(w), n - s);
    sum += even ? (w > 0 ? term : -term) : -term;
  }
  const double prefactor =
      toDouble(Rational(d.order() * dimV)) * std::pow(2.0 * kPi * metric.r, -s);
  // Tail: 2 * integral_{wMax-1}^inf x^{n-s} dx.
  const double tail = 2.0 * std::pow(static_cast<double>(wMax) - 1.0, n - s + 1.0) / (s - n - 1.0);
  return {prefactor * sum, std::abs(prefactor) * tail};
}

Rational etaCuspAsymptotic(int nComplex, const LatticeType &d, const TwistParameter &c,
                           const Integer &dimV) {
  if (d.n() != nComplex - 1)
    throw std::invalid_argument("etaCuspAsymptotic: lattice type must have length n-1");
  const Rational zc = hurwitzZetaNeg(nComplex, c);
  const Rational zm = hurwitzZetaNeg(nComplex, c.mirrored());
  const int sgn = nComplex % 2 == 0 ? 1 : -1;
  return Rational(sgn) * Rational(d.order() * dimV) * (zc + Rational(sgn) * zm);
}

std::vector<EigenvalueGroup> hermiteOracle(int n, double w, const HeisenbergMetric &metric,
                                           int levels) {
  if (levels < 4) throw std::invalid_argument("hermiteOracle: need at least 4 levels");
  if (w == 0.0) throw std::invalid_argument("hermiteOracle: w must be nonzero");
  checkMetric(n, metric);

  // Clifford action of the frame: pair 1 = (normal, central), pairs 2..n+1
  // horizontal. Multiplication by a boundary vector v acts as
  // gamma(T) gamma(v) on the positive half-module.
  SpinorModule spinor(n + 1);
  const std::vector<int> plus = spinor.gradedStates(true);
  const GaussianMatrix gammaT = spinor.generator(1, PairAxis::X);
  auto boundaryAction = [&](const GaussianMatrix &g) {
    return toComplex(restrictTo(GaussianMatrix(gammaT * g), plus));
  };
  const Eigen::MatrixXcd cz = boundaryAction(spinor.generator(1, PairAxis::Y));
  std::vector<Eigen::MatrixXcd> cx, cy;
  for (int j = 2; j <= n + 1; ++j) {
    cx.push_back(boundaryAction(spinor.generator(j, PairAxis::X)));
    cy.push_back(boundaryAction(spinor.generator(j, PairAxis::Y)));
  }
  const auto spinDim = static_cast<Eigen::Index>(plus.size());

  // Scaled oscillator: position = xi / beta, derivative = beta * d/dxi with
  // beta = sqrt(2 pi |w|).
  const double beta = std::sqrt(2.0 * kPi * std::abs(w));
  const auto L = static_cast<Eigen::Index>(levels);
  Eigen::MatrixXcd ladder = Eigen::MatrixXcd::Zero(L, L);
  for (Eigen::Index p = 1; p < L; ++p) ladder(p - 1, p) = std::sqrt(static_cast<double>(p));
  const Eigen::MatrixXcd position = (ladder + ladder.adjoint()) / std::sqrt(2.0);
  const Eigen::MatrixXcd derivative = (ladder - ladder.adjoint()) / std::sqrt(2.0);
  const Eigen::MatrixXcd oscillatorId = Eigen::MatrixXcd::Identity(L, L);

  Eigen::Index totalDim = spinDim;
  for (int j = 0; j < n; ++j) totalDim *= L;
  Eigen::MatrixXcd dirac = Eigen::MatrixXcd::Zero(totalDim, totalDim);

  auto modeOperator = [&](int mode, const Eigen::MatrixXcd &op,
                          const Eigen::MatrixXcd &spinOp) {
    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Identity(1, 1);
    for (int j = 0; j < n; ++j) acc = kron(acc, j == mode ? op : oscillatorId);
    return kron(acc, spinOp);
  };

  const std::complex<double> iUnit(0.0, 1.0);
  for (int j = 0; j < n; ++j) {
    const double rj = metric.rj[static_cast<size_t>(j)];
    dirac += modeOperator(j, rj * beta * derivative, cx[static_cast<size_t>(j)]);
    // 2 pi i w x = i sign(w) beta xi
    const double sgn = w > 0 ? 1.0 : -1.0;
    dirac += modeOperator(j, rj * sgn * beta * position,
                          Eigen::MatrixXcd(iUnit * cy[static_cast<size_t>(j)]));
  }
  {
    Eigen::MatrixXcd central = Eigen::MatrixXcd::Identity(1, 1);
    for (int j = 0; j < n; ++j) central = kron(central, oscillatorId);
    dirac += 2.0 * kPi * w * metric.r * kron(central, Eigen::MatrixXcd(iUnit * cz));
  }

  const double hermitianResidual = (dirac - dirac.adjoint()).cwiseAbs().maxCoeff();
  if (hermitianResidual > 1e-10 * (1.0 + dirac.cwiseAbs().maxCoeff()))
    throw std::logic_error("hermiteOracle: assembled operator is not Hermitian");

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(dirac);
  const Eigen::VectorXd values = solver.eigenvalues();
  const Eigen::MatrixXcd vectors = solver.eigenvectors();

  // Truncation filter: drop eigenvectors touching the top two levels.
  std::vector<double> kept;
  for (Eigen::Index col = 0; col < vectors.cols(); ++col) {
    double boundaryWeight = 0.0;
    for (Eigen::Index idx = 0; idx < totalDim; ++idx) {
      Eigen::Index rest = idx / spinDim;
      bool nearBoundary = false;
      for (int j = n - 1; j >= 0; --j) {
        const Eigen::Index pj = rest % L;
        rest /= L;
        if (pj >= L - 2) nearBoundary = true;
      }
      if (nearBoundary) boundaryWeight += std::norm(vectors(idx, col));
    }
    if (boundaryWeight < 1e-6) kept.push_back(values[col]);
  }
  std::sort(kept.begin(), kept.end());

  std::vector<EigenvalueGroup> groups;
  const double clusterTol = 1e-8 * (1.0 + (kept.empty() ? 0.0 : std::abs(kept.back())));
  for (size_t i = 0; i < kept.size();) {
    size_t j = i;
    while (j < kept.size() && kept[j] - kept[i] <= clusterTol) ++j;
    double mean = 0.0;
    for (size_t t = i; t < j; ++t) mean += kept[t];
    groups.push_back({mean / static_cast<double>(j - i), static_cast<int>(j - i)});
    i = j;
  }
  return groups;
}

} // namespace cuspeta
