#pragma once

#include <Eigen/Dense>

#include <optional>
#include <vector>

namespace cuspeta {

/// Finite-rank constant-coefficient Dirac system T (d/dt + A) on [0, inf):
/// A Hermitian, T^* = T^{-1} = -T, AT = -TA. Solutions are
/// sigma(t) = exp(-tA) sigma(0); square-integrable ones have sigma(0) in the
/// positive spectral subspace of A, bounded ("extended") ones in the
/// non-negative one.
struct ConstantDiracSystem {
  Eigen::MatrixXcd a;
  Eigen::MatrixXcd t;
  /// Optional super-symmetric grading: indices of the plus block. T must
  /// swap the blocks and A preserve them.
  std::optional<std::vector<int>> plusIndices;
};

/// Throws unless the algebraic system axioms hold to the given tolerance.
void validateSystem(const ConstantDiracSystem &sys, double tol = 1e-10);

/// Spectral boundary condition sigma(0) in H_{<a} (strict) or H_{<=a}.
struct SpectralCondition {
  double threshold = 0.0;
  bool inclusive = false;

  /// Adjoint boundary condition: (a, strict) <-> (-a, inclusive).
  SpectralCondition adjoint() const { return {-threshold, !inclusive}; }

  friend bool operator==(const SpectralCondition &x, const SpectralCondition &y) {
    return x.threshold == y.threshold && x.inclusive == y.inclusive;
  }
};

struct KernelDims {
  int l2 = 0;       ///< dim(H_{>0} intersect B)
  int extended = 0; ///< dim(H_{>=0} intersect B)
};

/// Kernel dimensions of the boundary value problem under the given
/// condition; both are eigenvalue counts in the intersected spectral ranges.
KernelDims kernelDims(const ConstantDiracSystem &sys, const SpectralCondition &bc);

/// Extended index: extended kernel minus the cokernel, the latter computed
/// as the L2 kernel under the adjoint boundary condition.
int indexExt(const ConstantDiracSystem &sys, const SpectralCondition &bc);

/// Both sides of the index identity
///   ind D_{<0,ext} = dim H_{[-lambda,0)} - dim ker D_{<=lambda,max}.
struct IndexIdentityReport {
  int extendedIndex = 0;
  int windowCount = 0;
  int maxKernel = 0;
  bool holds = false;
};

IndexIdentityReport checkIndexIdentity(const ConstantDiracSystem &sys, double lambda);

} // namespace cuspeta
