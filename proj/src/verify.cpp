#include "cuspeta/verify.hpp"

#include "cuspeta/cusps.hpp"
#include "cuspeta/halfline.hpp"
#include "cuspeta/heisenberg.hpp"
#include "cuspeta/lowenergy.hpp"
#include "cuspeta/unrep.hpp"
#include "cuspeta/zeta.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <sstream>

namespace cuspeta {

namespace {

constexpr double kPi = std::numbers::pi;

struct Failure {
  std::ostringstream message;
};

#define VERIFY_THAT(cond, failure, text)                                                        \
  do {                                                                                          \
    if (!(cond)) {                                                                              \
      (failure).message << text << "; ";                                                       \
      return;                                                                                   \
    }                                                                                           \
  } while (0)

std::vector<std::pair<std::string, LieRep>> catalogReps(int n) {
  std::vector<std::pair<std::string, LieRep>> reps;
  reps.emplace_back("trivial", trivialRep(n));
  reps.emplace_back("trace-shift", traceShift(trivialRep(n), Rational(n + 1, 2)));
  for (int q = 0; q <= n; ++q)
    reps.emplace_back("exterior(" + std::to_string(q) + ")", exteriorRep(n, q));
  reps.emplace_back("spin", spinRep(n));
  return reps;
}

/// Closed-form harmonic data of a representation, keyed by
/// (degree, central value), aggregated over irreducible components.
std::map<std::pair<int, Rational>, Integer> closedFormData(const LieRep &rep) {
  std::map<std::pair<int, Rational>, Integer> expected;
  for (const auto &[weight, mult] : highestWeights(rep))
    for (const KostantDatum &datum : kostantData(weight))
      expected[{datum.degree, datum.centralValue}] += Integer(mult) * datum.dim;
  return expected;
}

LatticeType randomLattice(std::mt19937 &rng, int length) {
  std::uniform_int_distribution<int> step(0, 3);
  std::vector<int> d(static_cast<size_t>(length));
  int value = 1 + step(rng) % 3;
  for (int i = 0; i < length; ++i) {
    d[static_cast<size_t>(i)] = value;
    const int factor = step(rng);
    value *= factor == 0 ? 1 : factor;
  }
  return LatticeType(std::move(d));
}

Rational randomRational(std::mt19937 &rng) {
  std::uniform_int_distribution<int> num(-50, 50), den(1, 8);
  return Rational(num(rng), den(rng));
}

// --- criterion bodies -------------------------------------------------------

void checkKostantOracle(Failure &failure) {
  for (int n = 2; n <= 4; ++n)
    for (const auto &[name, rep] : catalogReps(n)) {
      const LowEnergyOperator op = buildLowEnergy(n, rep);
      const HarmonicDecomposition hd = harmonicDecompose(op);
      std::map<std::pair<int, Rational>, Integer> actual;
      for (const auto &[degree, value, mult] : hd.flatten())
        actual[{degree, value}] += mult;
      const auto expected = closedFormData(rep);
      VERIFY_THAT(actual == expected, failure,
                  "harmonic data mismatch for n=" << n << " rep=" << name);
      Integer total = 0;
      for (const auto &[key, dim] : expected) total += dim;
      VERIFY_THAT(Integer(hd.kernelDim) == total, failure,
                  "kernel dimension mismatch for n=" << n << " rep=" << name);
    }
}

void checkNamedBundleClosedForms(Failure &failure) {
  auto leAndKer = [](const std::vector<DominantWeight> &weights, int n) {
    Integer le = 0, ker = 0;
    for (const DominantWeight &w : weights)
      for (const KostantDatum &datum : kostantData(w)) {
        const Rational margin = Rational(n - 1 - 2 * datum.degree) + Rational(2) * w[datum.degree];
        le += Integer(datum.degree % 2 == 0 ? margin.sign() : -margin.sign()) * datum.dim;
        if (datum.inKernel) ker += datum.dim;
      }
    return std::pair<Integer, Integer>(le, ker);
  };

  for (int n = 2; n <= 5; ++n) {
    const auto data = kostantData(DominantWeight::constant(n, Rational(n + 1, 2)));
    for (const KostantDatum &datum : data) {
      const int k = datum.degree;
      VERIFY_THAT(datum.dim == binomial(n - 1, k), failure,
                  "dolbeault b_" << k << " != C(n-1,k) at n=" << n);
      const Rational expectedZ = Rational((k % 2 == 0 ? 1 : -1) * (k - n));
      VERIFY_THAT(datum.centralValue == expectedZ, failure,
                  "dolbeault central value at n=" << n << " k=" << k);
    }
    const auto [dolbLe, dolbKer] =
        leAndKer({DominantWeight::constant(n, Rational(n + 1, 2))}, n);
    VERIFY_THAT(dolbLe == 0 && dolbKer == 0, failure, "dolbeault le/ker at n=" << n);
  }

  for (int n = 2; n <= 5; ++n) {
    const auto [le, ker] = leAndKer(BundleSpec::signature().weights(n), n);
    VERIFY_THAT(ker == 0, failure, "signature kernel at n=" << n);
    if (n % 2 == 1) {
      VERIFY_THAT(le == 0, failure, "signature le should vanish for odd n=" << n);
    } else {
      const Integer expected = Integer(2) * Integer((n / 2) % 2 == 0 ? 1 : -1) *
                               (binomial(n - 2, n / 2) - binomial(n - 2, n / 2 - 1));
      VERIFY_THAT(le == expected, failure, "signature le at n=" << n);
    }
  }

  for (int n = 2; n <= 5; ++n) {
    const auto [le, ker] = leAndKer({DominantWeight::constant(n, Rational(0))}, n);
    if (n % 2 == 0) {
      const Integer expected = Integer(2) * Integer(((n - 2) / 2) % 2 == 0 ? 1 : -1) *
                               binomial(n - 2, (n - 2) / 2);
      VERIFY_THAT(le == expected && ker == 0, failure, "spinor le/ker at even n=" << n);
    } else {
      VERIFY_THAT(le == 0 && ker == binomial(n - 1, (n - 1) / 2), failure,
                  "spinor le/ker at odd n=" << n);
    }
  }
}

void checkSeriesVsClosed(Failure &failure) {
  const std::vector<Rational> twists = {Rational(0), Rational(1, 3), Rational(1, 2)};
  for (int n = 1; n <= 3; ++n) {
    std::vector<int> entries;
    for (int i = 0; i < n; ++i) entries.push_back(1 << std::min(i, 2));
    const LatticeType d(std::move(entries));
    for (const Rational &cv : twists) {
      const TwistParameter c(cv);
      const Integer dimV = gammaRepData(d, c).dimV;
      const HeisenbergMetric metric = HeisenbergMetric::unit(n);
      const double s = n + 3;
      const EtaSeriesResult series = etaSeries(n, d, c, dimV, metric, s, 2000);
      const double sc = hurwitzZetaSeries(s - n, c.value(), 1e-12);
      const double sm = hurwitzZetaSeries(s - n, c.mirrored().value(), 1e-12);
      const double prefactor =
          toDouble(Rational(d.order() * dimV)) * std::pow(2.0 * kPi * metric.r, -s);
      const double closed = prefactor * (n % 2 == 0 ? sc - sm : -(sc + sm));
      VERIFY_THAT(std::abs(series.value - closed) <= 1e-6, failure,
                  "series/closed gap " << std::abs(series.value - closed) << " at n=" << n
                                       << " c=" << toString(cv));
    }
  }
}

void checkHermiteOracle(Failure &failure) {
  const double cutoff = 4.0 * kPi * kPi + 40.0 * kPi;
  const LatticeType d({1});
  const HeisenbergMetric metric = HeisenbergMetric::unit(1);
  const auto items = diracSquareSpectrum(1, d, TwistParameter(), metric, cutoff);

  // Expected signed spectrum of the single w=1 sector.
  std::map<double, int> squaredCount; // lambda -> state count
  for (const SpectralItem &item : items)
    if (item.w == Rational(1)) squaredCount[item.value] += 1;
  const double bottom = 4.0 * kPi * kPi;
  std::vector<std::pair<double, int>> expected; // (eigenvalue, multiplicity)
  for (const auto &[lambda, count] : squaredCount) {
    if (std::abs(lambda - bottom) < 1e-9) {
      expected.emplace_back(-2.0 * kPi, count); // n odd: only the negative root
    } else {
      VERIFY_THAT(count % 2 == 0, failure, "odd pairing count off the bottom eigenvalue");
      expected.emplace_back(-std::sqrt(lambda), count / 2);
      expected.emplace_back(std::sqrt(lambda), count / 2);
    }
  }

  const auto oracle = hermiteOracle(1, 1.0, metric, 60);
  auto oracleMultiplicity = [&](double value) {
    for (const EigenvalueGroup &g : oracle)
      if (std::abs(g.value - value) <= 1e-6) return g.multiplicity;
    return 0;
  };
  for (const auto &[value, mult] : expected)
    VERIFY_THAT(oracleMultiplicity(value) == mult, failure,
                "oracle multiplicity at " << value << ": got " << oracleMultiplicity(value)
                                          << ", want " << mult);
  VERIFY_THAT(oracleMultiplicity(2.0 * kPi) == 0, failure, "+2pi must be absent");

  // No unexpected eigenvalues strictly inside the trusted window.
  const double window = std::sqrt(cutoff) - 1e-3;
  for (const EigenvalueGroup &g : oracle) {
    if (std::abs(g.value) > window) continue;
    bool known = false;
    for (const auto &[value, mult] : expected)
      if (std::abs(g.value - value) <= 1e-6 && g.multiplicity == mult) known = true;
    VERIFY_THAT(known, failure, "unexpected oracle eigenvalue " << g.value);
  }
}

void checkZetaIdentities(Failure &failure) {
  for (int n = 1; n <= 8; ++n) {
    const Rational lhs = hurwitzZetaNeg(n, Rational(1, 2));
    const Rational rhs = (pow(Rational(2), 1 - n) - Rational(1)) * hurwitzZetaNeg(n, Rational(0));
    VERIFY_THAT(lhs == rhs, failure, "half-parameter identity fails at n=" << n);
    for (const Rational &c : {Rational(1, 3), Rational(1, 4), Rational(2, 5)}) {
      const Rational mirrored = hurwitzZetaNeg(n, Rational(1) - c);
      const Rational direct = hurwitzZetaNeg(n, c);
      const Rational expected = n % 2 == 0 ? direct : -direct;
      VERIFY_THAT(mirrored == expected, failure,
                  "reflection identity fails at n=" << n << " c=" << toString(c));
    }
  }
}

void checkSignBridge(Failure &failure) {
  std::mt19937 rng(715225741u);
  std::uniform_int_distribution<int> multiplier(1, 4);
  for (int n = 2; n <= 5; ++n)
    for (const Rational &cv : {Rational(0), Rational(1, 2), Rational(1, 3)})
      for (int draw = 0; draw < 5; ++draw) {
        const LatticeType d = randomLattice(rng, n - 1);
        const TwistParameter c(cv);
        const Integer dimV = gammaRepData(d, c).dimV * multiplier(rng);
        const Rational bridge = etaCuspAsymptotic(n, d, c, dimV);
        const Rational closed = etaClosed(n - 1, d, c, dimV, 0);
        VERIFY_THAT(bridge == -closed, failure,
                    "sign bridge fails at n=" << n << " c=" << toString(cv));
      }
}

void checkIndexPipeline(Failure &failure) {
  std::mt19937 rng(885320041u);
  std::uniform_int_distribution<int> cuspCount(1, 3);
  for (int draw = 0; draw < 100; ++draw) {
    const Rational v = randomRational(rng);

    for (int n = 2; n <= 4; ++n) {
      std::vector<LatticeType> cusps;
      std::vector<Integer> gammas;
      const int ends = cuspCount(rng);
      for (int e = 0; e < ends; ++e) {
        cusps.push_back(randomLattice(rng, n - 1));
        gammas.push_back(cusps.back().order());
      }
      const ManifoldDescription m{n, BundleSpec::dolbeault(), BulkTerm::volumeRatio(v), cusps,
                                  std::nullopt};
      VERIFY_THAT(extendedIndex(m) == dolbeaultIndex(n, v, gammas), failure,
                  "dolbeault pipeline mismatch at n=" << n << " draw=" << draw);
      VERIFY_THAT(l2Index(m) == extendedIndex(m), failure,
                  "dolbeault L2 index should equal the extended index (Fredholm)");
    }

    for (int n : {2, 4}) {
      std::vector<LatticeType> cusps;
      std::vector<Integer> gammas;
      const int ends = cuspCount(rng);
      for (int e = 0; e < ends; ++e) {
        cusps.push_back(randomLattice(rng, n - 1));
        gammas.push_back(cusps.back().order());
      }
      const ManifoldDescription m{n, BundleSpec::signature(), BulkTerm::volumeRatio(v), cusps,
                                  std::nullopt};
      VERIFY_THAT(extendedIndex(m) == signatureIndex(n, v, gammas, ends), failure,
                  "signature pipeline mismatch at n=" << n << " draw=" << draw);
    }
  }
}

ConstantDiracSystem randomSystem(std::mt19937 &rng) {
  std::uniform_int_distribution<int> pairCount(1, 5), zeroCount(0, 2), value(1, 9), den(1, 2);
  const int pairs = pairCount(rng);
  const int zeros = zeroCount(rng);
  const Eigen::Index k = 2 * pairs + zeros;

  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(k, k);
  Eigen::MatrixXcd t = Eigen::MatrixXcd::Zero(k, k);
  for (int p = 0; p < pairs; ++p) {
    const double mu = static_cast<double>(value(rng)) / den(rng);
    a(2 * p, 2 * p) = mu;
    a(2 * p + 1, 2 * p + 1) = -mu;
    t(2 * p, 2 * p + 1) = -1.0;
    t(2 * p + 1, 2 * p) = 1.0;
  }
  for (int z = 0; z < zeros; ++z) t(2 * pairs + z, 2 * pairs + z) = std::complex<double>(0, -1);

  // Dense disguise by a random unitary change of basis.
  std::normal_distribution<double> gauss;
  Eigen::MatrixXcd g(k, k);
  for (Eigen::Index r = 0; r < k; ++r)
    for (Eigen::Index c = 0; c < k; ++c) g(r, c) = std::complex<double>(gauss(rng), gauss(rng));
  const Eigen::MatrixXcd q = Eigen::HouseholderQR<Eigen::MatrixXcd>(g).householderQ();
  return {q * a * q.adjoint(), q * t * q.adjoint(), std::nullopt};
}

void checkHalfline(Failure &failure) {
  std::mt19937 rng(414213562u);
  std::uniform_real_distribution<double> lambdaDist(0.0, 6.0);
  for (int draw = 0; draw < 200; ++draw) {
    const ConstantDiracSystem sys = randomSystem(rng);
    const IndexIdentityReport report = checkIndexIdentity(sys, lambdaDist(rng));
    VERIFY_THAT(report.holds, failure,
                "index identity fails at draw " << draw << ": " << report.extendedIndex
                                                << " != " << report.windowCount << " - "
                                                << report.maxKernel);
    const SpectralCondition aps{0.0, false};
    VERIFY_THAT(indexExt(sys, aps) == 0, failure, "APS extended index nonzero at draw " << draw);
    VERIFY_THAT(kernelDims(sys, aps).extended == 0, failure,
                "APS extended kernel nonzero at draw " << draw);
    VERIFY_THAT(kernelDims(sys, aps.adjoint()).l2 == 0, failure,
                "APS cokernel nonzero at draw " << draw);
  }
}

void checkEtaSplit(Failure &failure) {
  for (int n = 2; n <= 4; ++n)
    for (const auto &[name, rep] : catalogReps(n)) {
      const LowEnergyOperator op = buildLowEnergy(n, rep);
      const GaussianMatrix anti = op.dz * op.dx + op.dx * op.dz;
      bool zero = true;
      for (Eigen::Index r = 0; r < anti.rows() && zero; ++r)
        for (Eigen::Index c = 0; c < anti.cols() && zero; ++c)
          if (!anti(r, c).isZero()) zero = false;
      VERIFY_THAT(zero, failure, "anticommutator nonzero for n=" << n << " rep=" << name);

      const GaussianMatrix kernel = exactKernelBasis(op.dx);
      const GaussianMatrix restricted = kernel.adjoint() * op.dz * kernel;
      VERIFY_THAT(etaFinite(op.dle) == etaFinite(restricted), failure,
                  "eta split fails for n=" << n << " rep=" << name);
      VERIFY_THAT(etaFinite(op.dx) == 0, failure,
                  "eta of the horizontal part nonzero for n=" << n << " rep=" << name);
    }
}

void checkFredholmPredicate(Failure &failure) {
  const std::vector<LatticeType> oneCusp1 = {LatticeType({1})};
  const std::vector<LatticeType> oneCusp2 = {LatticeType({1, 2})};
  const std::vector<LatticeType> oneCusp3 = {LatticeType({1, 1, 3})};
  const std::vector<LatticeType> oneCusp4 = {LatticeType({2, 2, 2, 4})};

  auto manifold = [](int n, BundleSpec bundle, std::vector<LatticeType> cusps) {
    return ManifoldDescription{n, std::move(bundle), BulkTerm::integral(Rational(0)),
                               std::move(cusps), std::nullopt};
  };

  VERIFY_THAT(fredholmType(manifold(2, BundleSpec::dolbeault(), oneCusp1)), failure,
              "dolbeault n=2 must be Fredholm");
  VERIFY_THAT(fredholmType(manifold(3, BundleSpec::dolbeault(), oneCusp2)), failure,
              "dolbeault n=3 must be Fredholm");
  VERIFY_THAT(fredholmType(manifold(4, BundleSpec::dolbeault(), oneCusp3)), failure,
              "dolbeault n=4 must be Fredholm");
  VERIFY_THAT(fredholmType(manifold(2, BundleSpec::signature(), oneCusp1)), failure,
              "signature n=2 must be Fredholm");
  VERIFY_THAT(fredholmType(manifold(4, BundleSpec::signature(), oneCusp3)), failure,
              "signature n=4 must be Fredholm");
  VERIFY_THAT(!fredholmType(manifold(3, BundleSpec::spinor(Rational(0)), oneCusp2)), failure,
              "periodic spinor n=3 must not be Fredholm");
  VERIFY_THAT(!fredholmType(manifold(5, BundleSpec::spinor(Rational(0)), oneCusp4)), failure,
              "periodic spinor n=5 must not be Fredholm");
  VERIFY_THAT(fredholmType(manifold(3, BundleSpec::spinor(Rational(1, 2)), oneCusp2)), failure,
              "antiperiodic spinor n=3 must be Fredholm");
  VERIFY_THAT(fredholmType(manifold(2, BundleSpec::spinor(Rational(0)), oneCusp1)), failure,
              "spinor n=2 must be Fredholm");
}

} // namespace

std::vector<CheckResult> runVerification(const std::string &filter) {
  struct Check {
    int id;
    const char *name;
    double budgetSeconds;
    std::function<void(Failure &)> body;
  };
  const std::vector<Check> checks = {
      {1, "kostant-oracle", 60.0, checkKostantOracle},
      {2, "named-bundle-closed-forms", 30.0, checkNamedBundleClosedForms},
      {3, "eta-series-vs-closed", 10.0, checkSeriesVsClosed},
      {4, "hermite-oracle", 10.0, checkHermiteOracle},
      {5, "zeta-identities", 10.0, checkZetaIdentities},
      {6, "eta-sign-bridge", 10.0, checkSignBridge},
      {7, "index-pipeline", 30.0, checkIndexPipeline},
      {8, "halfline-identities", 30.0, checkHalfline},
      {9, "anticommutator-eta-split", 120.0, checkEtaSplit},
      {10, "fredholm-predicate", 10.0, checkFredholmPredicate},
  };

  std::vector<CheckResult> results;
  for (const Check &check : checks) {
    if (!filter.empty() && std::string(check.name).find(filter) == std::string::npos) continue;
    CheckResult result;
    result.id = check.id;
    result.name = check.name;
    Failure failure;
    const auto start = std::chrono::steady_clock::now();
    try {
      check.body(failure);
    } catch (const std::exception &e) {
      failure.message << "exception: " << e.what();
    }
    result.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    result.detail = failure.message.str();
    if (result.detail.empty() && result.seconds > check.budgetSeconds) {
      std::ostringstream os;
      os << "runtime " << result.seconds << "s exceeds budget " << check.budgetSeconds << "s";
      result.detail = os.str();
    }
    result.passed = result.detail.empty();
    results.push_back(std::move(result));
  }
  return results;
}

} // namespace cuspeta
