#pragma once

#include "cuspeta/heisenberg.hpp"
#include "cuspeta/unrep.hpp"

#include <optional>
#include <vector>

namespace cuspeta {

enum class BundleKind { Dolbeault, Signature, Spinor, Custom };

/// Bundle data along a rank-n cusp. Named kinds expand to:
///   dolbeault -> weight ((n+1)/2, ..., (n+1)/2), dim 1, trivial twist;
///   signature -> the spinor representation (dim 2^n), trivial twist;
///   spinor    -> weight 0, dim 1, twist 0 or 1/2 (spin structures);
///   custom    -> explicit weight, arbitrary twist, optional dimension
///                override for the high-energy factor.
class BundleSpec {
public:
  static BundleSpec dolbeault();
  static BundleSpec signature();
  static BundleSpec spinor(const Rational &twist);
  static BundleSpec custom(DominantWeight weight, TwistParameter twist,
                           std::optional<Integer> dimOverride = std::nullopt);

  BundleKind kind() const { return kind_; }
  const TwistParameter &twist() const { return twist_; }
  const std::optional<DominantWeight> &customWeight() const { return weight_; }
  const std::optional<Integer> &dimOverride() const { return dimOverride_; }

  /// Highest weights of the coefficient representation for a rank-n cusp.
  std::vector<DominantWeight> weights(int n) const;
  /// Total coefficient dimension entering the high-energy eta.
  Integer coefficientDim(int n) const;

private:
  BundleSpec() = default;

  BundleKind kind_ = BundleKind::Custom;
  TwistParameter twist_;
  std::optional<DominantWeight> weight_;
  std::optional<Integer> dimOverride_;
};

/// A complex hyperbolic cusp of complex dimension n >= 2 with cross section
/// of lattice type d (length n-1) and the given bundle.
struct CuspDescription {
  int n = 0;
  LatticeType d;
  BundleSpec bundle;
};

void validateCusp(const CuspDescription &cusp);

/// Per-cusp contribution to the extended index:
/// corr = (asymptotic high-energy eta + low-energy eta + low-energy kernel)/2.
struct CorrectionReport {
  Rational heEta;
  Integer leEta;
  Integer kerDim;
  Rational corr;
};

CorrectionReport correction(const CuspDescription &cusp);

/// Bulk term: either the characteristic integral itself or, for the named
/// kinds, the volume ratio vol X / vol CP^n it is proportional to
/// (dolbeault: (-1)^n v, signature: v).
struct BulkTerm {
  enum class Kind { Integral, VolumeRatio };
  Kind kind = Kind::Integral;
  Rational value;

  static BulkTerm integral(Rational v) { return {Kind::Integral, std::move(v)}; }
  static BulkTerm volumeRatio(Rational v) { return {Kind::VolumeRatio, std::move(v)}; }
};

struct ManifoldDescription {
  int n = 0;
  BundleSpec bundle;
  BulkTerm bulk;
  std::vector<LatticeType> cusps;
  std::optional<Rational> hDiff; ///< h^+_inf - h^-_inf, when known
};

void validateManifold(const ManifoldDescription &m);

Rational resolveBulk(const ManifoldDescription &m);

Rational extendedIndex(const ManifoldDescription &m);

/// L2 index. Requires one of: hDiff given; Fredholm type (all low-energy
/// kernels vanish); or a spinor bundle in odd complex dimension (where
/// h^+ = h^-). Otherwise throws: the h^+ - h^- term is non-local and cannot
/// be computed from cusp data.
Rational l2Index(const ManifoldDescription &m);

/// True iff every cusp has vanishing low-energy kernel.
bool fredholmType(const ManifoldDescription &m);

/// Sum of the per-cusp kernel dimensions (= h^+_inf + h^-_inf).
Integer kernelSum(const ManifoldDescription &m);

/// Closed forms for the named bundles, used as pipeline cross-checks:
Rational dolbeaultIndex(int n, const Rational &volumeRatio, const std::vector<Integer> &gammas);
Rational signatureIndex(int n, const Rational &volumeRatio, const std::vector<Integer> &gammas,
                        int ends);
Rational spinorExtendedIndexOdd(int n, int ends);

/// Gauss-Bonnet consistency: (n+1) * volumeRatio == (-1)^n * eulerChar.
bool harderCheck(int n, const Rational &volumeRatio, const Integer &eulerChar);

} // namespace cuspeta
