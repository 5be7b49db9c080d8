#include "cuspeta/halfline.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <stdexcept>

namespace cuspeta {

namespace {

Eigen::VectorXd spectrumOf(const ConstantDiracSystem &sys) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(sys.a, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

struct Counter {
  Eigen::VectorXd values;
  double tol;

  // Comparisons snap to boundaries within tol.
  bool strictlyAbove(double v, double bound) const { return v > bound + tol; }
  bool atLeast(double v, double bound) const { return v > bound - tol; }
  bool strictlyBelow(double v, double bound) const { return v < bound - tol; }
  bool atMost(double v, double bound) const { return v < bound + tol; }

  int count(bool includeZeroBelow, const SpectralCondition &bc) const {
    int n = 0;
    for (Eigen::Index i = 0; i < values.size(); ++i) {
      const double v = values[i];
      const bool lower = includeZeroBelow ? atLeast(v, 0.0) : strictlyAbove(v, 0.0);
      const bool upper =
          bc.inclusive ? atMost(v, bc.threshold) : strictlyBelow(v, bc.threshold);
      if (lower && upper) ++n;
    }
    return n;
  }
};

Counter makeCounter(const ConstantDiracSystem &sys) {
  Eigen::VectorXd values = spectrumOf(sys);
  const double scale = values.size() == 0 ? 0.0 : values.cwiseAbs().maxCoeff();
  return {std::move(values), 1e-9 * (1.0 + scale)};
}

} // namespace

void validateSystem(const ConstantDiracSystem &sys, double tol) {
  const auto k = sys.a.rows();
  if (sys.a.cols() != k || sys.t.rows() != k || sys.t.cols() != k)
    throw std::invalid_argument("ConstantDiracSystem: A and T must be square of equal size");
  const double scale = 1.0 + sys.a.cwiseAbs().maxCoeff() + sys.t.cwiseAbs().maxCoeff();
  auto check = [&](const Eigen::MatrixXcd &m, const char *what) {
    if (m.cwiseAbs().maxCoeff() > tol * scale)
      throw std::invalid_argument(std::string("ConstantDiracSystem: ") + what);
  };
  check(sys.a - sys.a.adjoint(), "A is not Hermitian");
  check(sys.t + sys.t.adjoint(), "T is not skew-adjoint");
  check(sys.t * sys.t + Eigen::MatrixXcd::Identity(k, k), "T^2 != -1");
  check(sys.a * sys.t + sys.t * sys.a, "A and T do not anticommute");
  if (sys.plusIndices) {
    std::vector<bool> isPlus(static_cast<size_t>(k), false);
    for (int i : *sys.plusIndices) {
      if (i < 0 || i >= k) throw std::invalid_argument("ConstantDiracSystem: bad grading index");
      isPlus[static_cast<size_t>(i)] = true;
    }
    for (Eigen::Index r = 0; r < k; ++r)
      for (Eigen::Index c = 0; c < k; ++c) {
        const bool same = isPlus[static_cast<size_t>(r)] == isPlus[static_cast<size_t>(c)];
        if (same && std::abs(sys.t(r, c)) > tol * scale)
          throw std::invalid_argument("ConstantDiracSystem: T does not swap the grading");
        if (!same && std::abs(sys.a(r, c)) > tol * scale)
          throw std::invalid_argument("ConstantDiracSystem: A does not preserve the grading");
      }
  }
}

KernelDims kernelDims(const ConstantDiracSystem &sys, const SpectralCondition &bc) {
  validateSystem(sys);
  const Counter counter = makeCounter(sys);
  return {counter.count(false, bc), counter.count(true, bc)};
}

int indexExt(const ConstantDiracSystem &sys, const SpectralCondition &bc) {
  const KernelDims direct = kernelDims(sys, bc);
  const KernelDims adjoint = kernelDims(sys, bc.adjoint());
  return direct.extended - adjoint.l2;
}

IndexIdentityReport checkIndexIdentity(const ConstantDiracSystem &sys, double lambda) {
  if (lambda < 0.0) throw std::invalid_argument("checkIndexIdentity: lambda must be >= 0");
  IndexIdentityReport report;
  report.extendedIndex = indexExt(sys, SpectralCondition{0.0, false});

  const Counter counter = makeCounter(sys);
  for (Eigen::Index i = 0; i < counter.values.size(); ++i) {
    const double v = counter.values[i];
    if (counter.atLeast(v, -lambda) && counter.strictlyBelow(v, 0.0)) ++report.windowCount;
  }
  // dim ker D_{<=lambda,max}: L2 solutions with boundary value below the
  // inclusive threshold.
  report.maxKernel = kernelDims(sys, SpectralCondition{lambda, true}).l2;
  report.holds = report.extendedIndex == report.windowCount - report.maxKernel;
  return report;
}

} // namespace cuspeta
