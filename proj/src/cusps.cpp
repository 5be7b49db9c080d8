#include "cuspeta/cusps.hpp"

namespace cuspeta {

BundleSpec BundleSpec::dolbeault() {
  BundleSpec spec;
  spec.kind_ = BundleKind::Dolbeault;
  return spec;
}

BundleSpec BundleSpec::signature() {
  BundleSpec spec;
  spec.kind_ = BundleKind::Signature;
  return spec;
}

BundleSpec BundleSpec::spinor(const Rational &twist) {
  if (!twist.isZero() && twist != Rational(1, 2))
    throw std::invalid_argument("BundleSpec: spinor twist must be 0 or 1/2");
  BundleSpec spec;
  spec.kind_ = BundleKind::Spinor;
  spec.twist_ = TwistParameter(twist);
  return spec;
}

BundleSpec BundleSpec::custom(DominantWeight weight, TwistParameter twist,
                              std::optional<Integer> dimOverride) {
  BundleSpec spec;
  spec.kind_ = BundleKind::Custom;
  spec.twist_ = std::move(twist);
  spec.weight_ = std::move(weight);
  spec.dimOverride_ = std::move(dimOverride);
  return spec;
}

std::vector<DominantWeight> BundleSpec::weights(int n) const {
  switch (kind_) {
  case BundleKind::Dolbeault:
    return {DominantWeight::constant(n, Rational(n + 1, 2))};
  case BundleKind::Spinor:
    return {DominantWeight::constant(n, Rational(0))};
  case BundleKind::Signature: {
    // Components of the spinor representation: l leading entries
    // l-(n-1)/2, the remaining ones l-(n+1)/2, for l = 0..n.
    std::vector<DominantWeight> out;
    for (int l = 0; l <= n; ++l) {
      std::vector<Rational> entries;
      entries.reserve(static_cast<size_t>(n));
      for (int j = 0; j < n; ++j)
        entries.push_back(Rational(l) -
                          (j < l ? Rational(n - 1, 2) : Rational(n + 1, 2)));
      out.emplace_back(std::move(entries));
    }
    return out;
  }
  case BundleKind::Custom:
    return {*weight_};
  }
  throw std::logic_error("BundleSpec: unknown kind");
}

Integer BundleSpec::coefficientDim(int n) const {
  if (kind_ == BundleKind::Custom && dimOverride_) return *dimOverride_;
  Integer total = 0;
  for (const DominantWeight &w : weights(n)) total += weylDim(w);
  return total;
}

void validateCusp(const CuspDescription &cusp) {
  if (cusp.n < 2) throw std::invalid_argument("CuspDescription: complex dimension must be >= 2");
  if (cusp.d.n() != cusp.n - 1)
    throw std::invalid_argument("CuspDescription: lattice type must have length n-1");
  if (cusp.bundle.kind() == BundleKind::Signature && cusp.n % 2 != 0)
    throw std::invalid_argument("CuspDescription: signature bundle requires even n");
}

CorrectionReport correction(const CuspDescription &cusp) {
  validateCusp(cusp);
  const int n = cusp.n;
  const BundleSpec &bundle = cusp.bundle;
  const TwistParameter &twist = bundle.twist();

  // High-energy part: the lattice representation dimension (1 when the twist
  // is trivial) times the coefficient dimension.
  const Integer gammaDim = twist.isTrivial() ? Integer(1) : gammaRepData(cusp.d, twist).dimV;
  const Integer dimTotal = gammaDim * bundle.coefficientDim(n);

  CorrectionReport report;
  report.heEta = etaCuspAsymptotic(n, cusp.d, twist, dimTotal);
  report.leEta = 0;
  report.kerDim = 0;

  if (twist.isTrivial()) {
    // Low-energy eta and kernel from the closed-form harmonic data, summed
    // over the irreducible coefficient components.
    for (const DominantWeight &w : bundle.weights(n)) {
      for (const KostantDatum &datum : kostantData(w)) {
        const Rational margin =
            Rational(n - 1 - 2 * datum.degree) + Rational(2) * w[datum.degree];
        const int sgn = margin.sign();
        report.leEta += Integer(datum.degree % 2 == 0 ? sgn : -sgn) * datum.dim;
        if (datum.inKernel) report.kerDim += datum.dim;
      }
    }
  }
  report.corr =
      (report.heEta + Rational(report.leEta) + Rational(report.kerDim)) / Rational(2);
  return report;
}

void validateManifold(const ManifoldDescription &m) {
  if (m.n < 2) throw std::invalid_argument("ManifoldDescription: complex dimension must be >= 2");
  if (m.bundle.kind() == BundleKind::Signature && m.n % 2 != 0)
    throw std::invalid_argument("ManifoldDescription: signature bundle requires even n");
  for (const LatticeType &d : m.cusps)
    if (d.n() != m.n - 1)
      throw std::invalid_argument("ManifoldDescription: cusp lattice type must have length n-1");
}

Rational resolveBulk(const ManifoldDescription &m) {
  if (m.bulk.kind == BulkTerm::Kind::Integral) {
    if (m.bundle.kind() == BundleKind::Spinor && m.n % 2 == 1 && !m.bulk.value.isZero())
      throw std::invalid_argument(
          "bulk: the index density of a spinor bundle vanishes for odd n; integral must be 0");
    return m.bulk.value;
  }
  switch (m.bundle.kind()) {
  case BundleKind::Dolbeault:
    return m.n % 2 == 0 ? m.bulk.value : -m.bulk.value;
  case BundleKind::Signature:
    return m.bulk.value;
  case BundleKind::Spinor:
    if (m.n % 2 == 1) return Rational(0); // index density vanishes
    throw std::invalid_argument(
        "bulk: no proportionality rule for spinor bundles in even dimension; provide an integral");
  case BundleKind::Custom:
    throw std::invalid_argument("bulk: custom bundles require an explicit integral value");
  }
  throw std::logic_error("resolveBulk: unknown bundle kind");
}

namespace {

std::vector<CorrectionReport> allCorrections(const ManifoldDescription &m) {
  std::vector<CorrectionReport> out;
  out.reserve(m.cusps.size());
  for (const LatticeType &d : m.cusps) out.push_back(correction({m.n, d, m.bundle}));
  return out;
}

} // namespace

Rational extendedIndex(const ManifoldDescription &m) {
  validateManifold(m);
  Rational acc = resolveBulk(m);
  for (const CorrectionReport &report : allCorrections(m)) acc += report.corr;
  return acc;
}

Rational l2Index(const ManifoldDescription &m) {
  validateManifold(m);
  Rational acc = resolveBulk(m);
  Integer kernels = 0;
  for (const CorrectionReport &report : allCorrections(m)) {
    acc += (report.heEta + Rational(report.leEta)) / Rational(2);
    kernels += report.kerDim;
  }
  if (m.hDiff) return acc - *m.hDiff / Rational(2);
  if (kernels == 0) return acc; // Fredholm: h^+ = h^- = 0
  if (m.bundle.kind() == BundleKind::Spinor && m.n % 2 == 1) return acc; // h^+ = h^-
  throw std::invalid_argument(
      "l2Index: h^+ - h^- is non-local and required here; provide h_diff");
}

bool fredholmType(const ManifoldDescription &m) {
  validateManifold(m);
  return kernelSum(m) == 0;
}

Integer kernelSum(const ManifoldDescription &m) {
  Integer acc = 0;
  for (const CorrectionReport &report : allCorrections(m)) acc += report.kerDim;
  return acc;
}

Rational dolbeaultIndex(int n, const Rational &volumeRatio, const std::vector<Integer> &gammas) {
  if (n < 2) throw std::invalid_argument("dolbeaultIndex: n must be >= 2");
  Rational acc = n % 2 == 0 ? volumeRatio : -volumeRatio;
  if (n % 2 == 0) {
    Integer sum = 0;
    for (const Integer &g : gammas) sum += g;
    acc += hurwitzZetaNeg(n, Rational(0)) * Rational(sum); // zeta(1-n)
  }
  return acc;
}

Rational signatureIndex(int n, const Rational &volumeRatio, const std::vector<Integer> &gammas,
                        int ends) {
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("signatureIndex: n must be even and >= 2");
  Integer sum = 0;
  for (const Integer &g : gammas) sum += g;
  Rational acc = volumeRatio;
  acc += Rational(Integer(1) << n) * hurwitzZetaNeg(n, Rational(0)) * Rational(sum); // 2^n zeta(1-n)
  const Integer middle = binomial(n - 2, n / 2) - binomial(n - 2, n / 2 - 1);
  const int sgn = (n / 2) % 2 == 0 ? 1 : -1;
  acc += Rational(Integer(ends) * Integer(sgn) * middle);
  return acc;
}

Rational spinorExtendedIndexOdd(int n, int ends) {
  if (n % 2 != 1) throw std::invalid_argument("spinorExtendedIndexOdd: n must be odd");
  return Rational(Integer(ends) * binomial(n - 1, (n - 1) / 2), Integer(2));
}

bool harderCheck(int n, const Rational &volumeRatio, const Integer &eulerChar) {
  const Rational lhs = Rational(n + 1) * volumeRatio;
  const Rational rhs = n % 2 == 0 ? Rational(eulerChar) : -Rational(eulerChar);
  return lhs == rhs;
}

} // namespace cuspeta
