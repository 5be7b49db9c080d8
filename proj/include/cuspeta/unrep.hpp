#pragma once

#include "cuspeta/clifford.hpp"
#include "cuspeta/linalg.hpp"

#include <utility>
#include <vector>

namespace cuspeta {

/// Dominant weight of u(n): nonincreasing rationals with integral differences.
class DominantWeight {
public:
  explicit DominantWeight(std::vector<Rational> entries);

  int rank() const { return static_cast<int>(entries_.size()); }
  const Rational &operator[](int j) const { return entries_[static_cast<size_t>(j)]; }
  const std::vector<Rational> &entries() const { return entries_; }

  friend bool operator==(const DominantWeight &a, const DominantWeight &b) {
    return a.entries_ == b.entries_;
  }
  friend bool operator<(const DominantWeight &a, const DominantWeight &b);

  static DominantWeight constant(int n, const Rational &value);

private:
  std::vector<Rational> entries_;
};

std::string toString(const DominantWeight &w);

/// Weyl dimension formula for u(n): prod_{j<k} (k-j-w_k+w_j)/(k-j).
Integer weylDim(const DominantWeight &w);

/// Closed-form cohomology data of the boundary complex attached to an
/// irreducible u(n) representation: for each degree k = 0..n-1 the dimension
/// of the harmonic space and the scalar by which the central direction acts
/// on it.
struct KostantDatum {
  int degree = 0;             ///< k
  Integer dim;                ///< b_k
  Rational centralValue;      ///< eigenvalue of the central operator on H^k
  bool inKernel = false;      ///< centralValue == 0
};

std::vector<KostantDatum> kostantData(const DominantWeight &w);

/// Explicit u(n) representation: complex matrices on the complexified
/// elementary generators E_{jk} (complex-linear extension from the
/// skew-Hermitian matrices). Indices are 0-based.
class LieRep {
public:
  LieRep(int n, std::vector<GaussianMatrix> elementaryAction);

  int n() const { return n_; }
  Eigen::Index dim() const { return dim_; }
  const GaussianMatrix &elementary(int j, int k) const {
    return action_[static_cast<size_t>(j * n_ + k)];
  }

private:
  int n_ = 0;
  Eigen::Index dim_ = 0;
  std::vector<GaussianMatrix> action_;
};

LieRep trivialRep(int n);
LieRep definingRep(int n);
/// q-th exterior power of the defining representation, 0 <= q <= n.
LieRep exteriorRep(int n, int q);
/// Spinor representation of u(n) on the rank-2n Clifford module: the
/// tangent-space action A |-> (x -> A x + tr(A) x) composed with the spin
/// lift. Highest weights are the n+1 half-integral weights with l leading
/// entries l-(n-1)/2 and the rest l-(n+1)/2.
LieRep spinRep(int n);
LieRep directSum(const LieRep &a, const LieRep &b);
LieRep tensorRep(const LieRep &a, const LieRep &b);
/// A |-> rho(A) + s tr(A) id; shifts every weight by (s,...,s).
LieRep traceShift(const LieRep &rep, const Rational &s);

/// Highest weights with multiplicities, extracted by joint diagonalization of
/// the Cartan action and the kernel of the raising operators. Requires the
/// Cartan matrices rho(E_jj) to be diagonal with rational entries (true for
/// every catalog representation); throws otherwise, or when the extracted
/// weights fail the dimension count sum(mult * weylDim) == dim rho.
std::vector<std::pair<DominantWeight, int>> highestWeights(const LieRep &rep);

} // namespace cuspeta
