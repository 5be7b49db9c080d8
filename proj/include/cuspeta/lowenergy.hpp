#pragma once

#include "cuspeta/clifford.hpp"
#include "cuspeta/unrep.hpp"

namespace cuspeta {

/// Boundary model operator of a rank-n complex hyperbolic cusp on the finite
/// dimensional space of constant sections, Sigma^+ tensor V.
///
/// Clifford pair 1 carries the (normal, central) directions, pairs 2..n the
/// horizontal ones. The three pieces:
///
///   dx = sum_{j>=2} gamma(T)gamma(X_j) (x) rho(E_1j - E_j1)
///                 + gamma(T)gamma(Y_j) (x) rho(-i(E_1j + E_j1)),
///   dz = (1/2) sum_{j>=2} gamma(T)gamma(Z)gamma(X_j)gamma(Y_j)
///                 + gamma(T)gamma(Z) (x) rho(-i E_11),
///   dle = dz + dx,
///
/// all Hermitian, with {dz, dx} = 0 exactly. The boundary operator of the
/// index theory is aLe() = -dle; the sign matters for every eta value
/// downstream, so both are exposed.
struct LowEnergyOperator {
  int n = 0;
  LieRep rep;
  std::vector<int> plusStates; ///< Fock masks of Sigma^+, increasing
  GaussianMatrix dx, dz, dle;

  GaussianMatrix aLe() const { return -dle; }

  /// Grading degree (occupied count among pairs 2..n) of a Sigma^+ state.
  static int degreeOf(int fockMask) {
    return __builtin_popcount(static_cast<unsigned>(fockMask >> 1));
  }
};

/// Builds the model operator; throws if the anticommutator identity or
/// Hermiticity fails (construction-bug signal).
LowEnergyOperator buildLowEnergy(int n, const LieRep &rep);

struct HarmonicBlock {
  int degree = 0;
  int dim = 0;
  /// dz eigenvalues on the block, with multiplicities, sorted by value.
  std::vector<std::pair<Rational, int>> centralEigenvalues;
};

struct HarmonicDecomposition {
  std::vector<HarmonicBlock> blocks; ///< degrees 0..n-1
  int kernelDim = 0;                 ///< dim ker dx

  /// Flattened (degree, eigenvalue, multiplicity), sorted; convenient for
  /// comparisons against closed-form data.
  std::vector<std::tuple<int, Rational, int>> flatten() const;
};

/// Exact kernel of dx split by grading degree, with the central operator
/// diagonalized on each block. Requires dz diagonal in the product basis
/// (true for every catalog representation); throws otherwise, and throws if a
/// kernel vector straddles grading blocks.
HarmonicDecomposition harmonicDecompose(const LowEnergyOperator &op);

/// Float-path decomposition via SVD kernels; thresholds 1e-7 (kernel) and
/// 1e-8 (eigenvalue clustering). Works for any representation.
HarmonicDecomposition harmonicDecomposeNumeric(const LowEnergyOperator &op);

/// Finite-dimensional eta: #positive - #negative eigenvalues, exact.
int etaFinite(const GaussianMatrix &hermitian);
/// Float path with relative zero threshold 1e-7.
int etaFiniteNumeric(const Eigen::MatrixXcd &hermitian);

} // namespace cuspeta
