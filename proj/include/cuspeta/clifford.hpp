#pragma once

#include "cuspeta/linalg.hpp"

#include <vector>

namespace cuspeta {

enum class PairAxis { X, Y };

/// The complex Clifford module of rank 2n in its fermionic Fock model.
///
/// Basis states are the subsets of {1..n} (bitmask, bit j-1 <=> mode j
/// occupied). The j-th Clifford pair acts through the fermionic ladder
/// operators of mode j:
///
///   X_j = a_j^+ - a_j,   Y_j = i (a_j^+ + a_j),
///
/// so that all generators are skew-Hermitian, square to -1, and generators of
/// distinct pairs anticommute. The involution of pair j,
/// omega_j = i X_j Y_j, is diagonal: +1 on states without mode j, -1 on
/// states containing it. The product omega_1 ... omega_n is the complex
/// volume grading; its +1 eigenspace consists of the states with an even
/// number of occupied modes.
///
/// Note the sign convention: it is fixed by letting the "holomorphic"
/// combination (X_j - i Y_j)/2 act as the creation operator and its
/// conjugate as minus the annihilation operator. Flipping the orientation
/// would flip the volume grading; exactly one convention is supported.
class SpinorModule {
public:
  explicit SpinorModule(int modes);

  int modes() const { return modes_; }
  Eigen::Index dim() const { return Eigen::Index(1) << modes_; }

  /// Mode occupancy of a basis state.
  bool occupied(int state, int mode) const { return (state >> (mode - 1)) & 1; }
  int occupationCount(int state) const;

  /// Clifford multiplication by the unit vector of pair `mode` on the given
  /// axis; modes are 1-based.
  GaussianMatrix generator(int mode, PairAxis axis) const;

  /// omega_j = i X_j Y_j, a diagonal involution.
  GaussianMatrix involution(int mode) const;

  /// Complex volume grading omega_1 ... omega_n (diagonal, entries +-1).
  GaussianMatrix volumeGrading() const;

  /// Basis states with volume grading +1 (plus = true) or -1, in increasing
  /// bitmask order.
  std::vector<int> gradedStates(bool plus) const;

  /// Spinor action of an antisymmetric matrix B on R^{2n}:
  /// (1/4) sum_l e_l (B e_l) as a Clifford element. Satisfies
  /// [spinLift(B), gamma(v)] = gamma(B v). The basis index 2j-2 is the X axis
  /// of pair j and 2j-1 its Y axis. Rejects non-antisymmetric input.
  GaussianMatrix spinLift(const RationalMatrix &b) const;

  /// Complex-bilinear extension of spinLift; requires B^T = -B.
  GaussianMatrix spinLiftComplex(const GaussianMatrix &b) const;

private:
  GaussianMatrix creation(int mode) const;
  GaussianMatrix annihilation(int mode) const;

  int modes_;
};

} // namespace cuspeta
