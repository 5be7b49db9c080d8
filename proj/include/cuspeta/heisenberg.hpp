#pragma once

#include "cuspeta/zeta.hpp"

#include <vector>

namespace cuspeta {

/// Isomorphism type of a uniform lattice in the Heisenberg group of
/// dimension 2n+1: positive integers with d_i | d_{i+1}.
class LatticeType {
public:
  explicit LatticeType(std::vector<int> d);

  int n() const { return static_cast<int>(d_.size()); }
  const std::vector<int> &entries() const { return d_; }
  Integer order() const; ///< |Gamma| = d_1 ... d_n

private:
  std::vector<int> d_;
};

/// Data of the irreducible unitary lattice representation with twist c:
/// m_j is the denominator of c*d_j and dim V = m_1 ... m_n.
struct GammaRepData {
  TwistParameter c;
  std::vector<Integer> m;
  Integer dimV;
};

GammaRepData gammaRepData(const LatticeType &d, const TwistParameter &c);

/// Left-invariant metric in normal form: r_1 X_1, ..., r_n Y_n, r Z
/// orthonormal.
struct HeisenbergMetric {
  std::vector<double> rj;
  double r = 1.0;

  static HeisenbergMetric unit(int n) { return {std::vector<double>(static_cast<size_t>(n), 1.0), 1.0}; }
};

/// One eigenvalue of the squared flat Dirac operator in the w-sector:
/// lambda = 4 pi^2 w^2 r^2 + 2 pi |w| sum_j (2 p_j + 1 + eps_j sign w) r_j^2,
/// with multiplicity |Gamma| dimV |w|^n.
struct SpectralItem {
  Rational w;
  std::vector<int> p;
  std::vector<int> eps; ///< entries +-1
  double value = 0.0;
  Integer multiplicity;
};

/// All squared-operator eigenvalues up to the cutoff over the sectors
/// w = c mod 1, w != 0; the w = 0 sector carries no spectral asymmetry and is
/// omitted throughout. Sorted by eigenvalue.
std::vector<SpectralItem> diracSquareSpectrum(int n, const LatticeType &d, const TwistParameter &c,
                                              const HeisenbergMetric &metric, double cutoff);

/// Exact eta value of the flat Dirac operator at a non-positive integer s,
/// with the metric factor (2 pi r)^{-s} dropped; at s = 0 that factor is 1
/// and the value is the eta invariant itself.
///
///   n even:  |Gamma| dimV (zeta_c(s-n) - zeta_{1-c}(s-n))
///   n odd:  -|Gamma| dimV (zeta_c(s-n) + zeta_{1-c}(s-n))
///
/// dimV is the total auxiliary dimension (lattice representation times
/// coefficient space).
Rational etaClosed(int n, const LatticeType &d, const TwistParameter &c, const Integer &dimV,
                   int s);

struct EtaSeriesResult {
  double value = 0.0;
  double tailBound = 0.0;
};

/// Truncated eta series over 0 < |w| <= wMax at real s > n+1, including the
/// (2 pi r)^{-s} factor, with an integral-comparison tail bound.
EtaSeriesResult etaSeries(int n, const LatticeType &d, const TwistParameter &c,
                          const Integer &dimV, const HeisenbergMetric &metric, double s, int wMax);

/// Asymptotic boundary eta of a rank-nComplex cusp whose cross section has
/// lattice type d (length nComplex-1):
///   (-1)^n |Gamma| dimV (zeta_c(1-n) + (-1)^n zeta_{1-c}(1-n)),  n = nComplex.
Rational etaCuspAsymptotic(int nComplex, const LatticeType &d, const TwistParameter &c,
                           const Integer &dimV);

struct EigenvalueGroup {
  double value = 0.0;
  int multiplicity = 0;
};

/// Independent spectral oracle for one irreducible w-sector: realizes the
/// flat Dirac operator on a truncated harmonic-oscillator basis (position and
/// derivative act through ladder matrices in the scaled Hermite basis
/// f_p(x) = h_p(sqrt(2 pi |w|) x)) and diagonalizes it. Eigenvectors with
/// weight >= 1e-6 on the top two oscillator levels of any mode are discarded
/// as truncation pollution. Multiplicities are per sector, i.e. without the
/// |Gamma| dimV |w|^n factor.
std::vector<EigenvalueGroup> hermiteOracle(int n, double w, const HeisenbergMetric &metric,
                                           int levels);

} // namespace cuspeta
