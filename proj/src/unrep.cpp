#include "cuspeta/unrep.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace cuspeta {

DominantWeight::DominantWeight(std::vector<Rational> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw std::invalid_argument("DominantWeight: empty weight");
  for (size_t j = 0; j + 1 < entries_.size(); ++j) {
    if (entries_[j] < entries_[j + 1])
      throw std::invalid_argument("DominantWeight: entries must be nonincreasing");
    if (!(entries_[j] - entries_[j + 1]).isInteger())
      throw std::invalid_argument("DominantWeight: entry differences must be integral");
  }
}

bool operator<(const DominantWeight &a, const DominantWeight &b) {
  if (a.rank() != b.rank()) return a.rank() < b.rank();
  for (int j = 0; j < a.rank(); ++j) {
    if (a[j] < b[j]) return true;
    if (b[j] < a[j]) return false;
  }
  return false;
}

DominantWeight DominantWeight::constant(int n, const Rational &value) {
  return DominantWeight(std::vector<Rational>(static_cast<size_t>(n), value));
}

std::string toString(const DominantWeight &w) {
  std::ostringstream os;
  os << '(';
  for (int j = 0; j < w.rank(); ++j) {
    if (j) os << ',';
    os << w[j];
  }
  os << ')';
  return os.str();
}

Integer weylDim(const DominantWeight &w) {
  const int n = w.rank();
  Rational dim(1);
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k)
      dim *= (Rational(k - j) - w[k] + w[j]) / Rational(k - j);
  if (!dim.isInteger() || dim.sign() <= 0)
    throw std::logic_error("weylDim: formula did not produce a positive integer");
  return dim.num();
}

std::vector<KostantDatum> kostantData(const DominantWeight &w) {
  const int n = w.rank();
  const Integer dimV = weylDim(w);
  std::vector<KostantDatum> out;
  out.reserve(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) {
    Rational b = Rational(factorial(n - 1) * dimV);
    for (int j = 0; j < n; ++j) {
      if (j == k) continue;
      // |w_j - w_{k+1} + (k+1) - j| in 1-based indices.
      const Rational factor = abs(w[j] - w[k] + Rational(k - j));
      if (factor.isZero())
        throw std::logic_error("kostantData: vanishing factor for a dominant weight");
      b /= factor;
    }
    if (!b.isInteger()) throw std::logic_error("kostantData: non-integral dimension");
    KostantDatum datum;
    datum.degree = k;
    datum.dim = b.num();
    const Rational z = (Rational(2 * k) - Rational(2) * w[k] - Rational(n) + Rational(1)) / Rational(2);
    datum.centralValue = (k % 2 == 0) ? z : -z;
    datum.inKernel = datum.centralValue.isZero();
    out.push_back(std::move(datum));
  }
  return out;
}

LieRep::LieRep(int n, std::vector<GaussianMatrix> elementaryAction)
    : n_(n), action_(std::move(elementaryAction)) {
  if (n_ < 1) throw std::invalid_argument("LieRep: rank must be positive");
  if (action_.size() != static_cast<size_t>(n_) * static_cast<size_t>(n_))
    throw std::invalid_argument("LieRep: expected n*n generator images");
  dim_ = action_.front().rows();
  for (const auto &m : action_)
    if (m.rows() != dim_ || m.cols() != dim_)
      throw std::invalid_argument("LieRep: inconsistent matrix sizes");
}

LieRep trivialRep(int n) {
  std::vector<GaussianMatrix> action(static_cast<size_t>(n) * n, GaussianMatrix::Zero(1, 1));
  return LieRep(n, std::move(action));
}

LieRep definingRep(int n) {
  std::vector<GaussianMatrix> action;
  action.reserve(static_cast<size_t>(n) * n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      GaussianMatrix e = GaussianMatrix::Zero(n, n);
      e(j, k) = GaussianRational(1);
      action.push_back(std::move(e));
    }
  return LieRep(n, std::move(action));
}

LieRep exteriorRep(int n, int q) {
  if (q < 0 || q > n) throw std::invalid_argument("exteriorRep: degree out of range");
  // Basis: q-subsets of {0..n-1} as sorted index tuples, ordered by bitmask.
  std::vector<int> subsets;
  for (int mask = 0; mask < (1 << n); ++mask)
    if (__builtin_popcount(static_cast<unsigned>(mask)) == q) subsets.push_back(mask);
  std::map<int, int> position;
  for (size_t i = 0; i < subsets.size(); ++i) position[subsets[i]] = static_cast<int>(i);
  const auto dim = static_cast<Eigen::Index>(subsets.size());

  std::vector<GaussianMatrix> action;
  action.reserve(static_cast<size_t>(n) * n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      GaussianMatrix e = GaussianMatrix::Zero(dim, dim);
      for (size_t col = 0; col < subsets.size(); ++col) {
        const int mask = subsets[col];
        if (!(mask >> k & 1)) continue;
        if (j == k) {
          e(static_cast<Eigen::Index>(col), static_cast<Eigen::Index>(col)) += GaussianRational(1);
          continue;
        }
        if (mask >> j & 1) continue;
        const int target = (mask & ~(1 << k)) | (1 << j);
        // Sign from moving index k to slot j in the ordered wedge.
        const int lo = std::min(j, k) + 1, hi = std::max(j, k) - 1;
        int between = 0;
        for (int t = lo; t <= hi; ++t) between += mask >> t & 1;
        e(position[target], static_cast<Eigen::Index>(col)) =
            GaussianRational(between % 2 == 0 ? 1 : -1);
      }
      action.push_back(std::move(e));
    }
  return LieRep(n, std::move(action));
}

namespace {

// Real 2n x 2n form of a complex n x n matrix acting on C^n = R^{2n},
// with e_{2j-1} = e_j and e_{2j} = i e_j (1-based pairs).
GaussianMatrix realForm(const GaussianMatrix &m) {
  const Eigen::Index n = m.rows();
  GaussianMatrix out = GaussianMatrix::Zero(2 * n, 2 * n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index k = 0; k < n; ++k) {
      out(2 * j, 2 * k) = GaussianRational(m(j, k).re);
      out(2 * j + 1, 2 * k) = GaussianRational(m(j, k).im);
      out(2 * j, 2 * k + 1) = GaussianRational(-m(j, k).im);
      out(2 * j + 1, 2 * k + 1) = GaussianRational(m(j, k).re);
    }
  return out;
}

// Tangent action of A in u(n): x -> A x + tr(A) x, as a real endomorphism.
GaussianMatrix tangentAction(const GaussianMatrix &a) {
  GaussianRational trace(0);
  for (Eigen::Index j = 0; j < a.rows(); ++j) trace += a(j, j);
  GaussianMatrix shifted = a;
  for (Eigen::Index j = 0; j < a.rows(); ++j) shifted(j, j) += trace;
  return realForm(shifted);
}

} // namespace

LieRep spinRep(int n) {
  SpinorModule spinor(n);
  std::vector<GaussianMatrix> action;
  action.reserve(static_cast<size_t>(n) * n);
  const GaussianRational i = GaussianRational::i();
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      // Complexification: E_jk = (A - i S)/2 with A = E_jk - E_kj in u(n)
      // and S = i(E_jk + E_kj) in u(n); both have antisymmetric tangent
      // actions, so the lift extends complex-linearly.
      GaussianMatrix a = GaussianMatrix::Zero(n, n);
      GaussianMatrix s = GaussianMatrix::Zero(n, n);
      a(j, k) += GaussianRational(1);
      a(k, j) -= GaussianRational(1);
      s(j, k) += i;
      s(k, j) += i;
      const GaussianMatrix lift =
          spinor.spinLiftComplex(tangentAction(a)) - i * spinor.spinLiftComplex(tangentAction(s));
      action.push_back(Rational(1, 2) * lift);
    }
  return LieRep(n, std::move(action));
}

LieRep directSum(const LieRep &a, const LieRep &b) {
  if (a.n() != b.n()) throw std::invalid_argument("directSum: mismatched rank");
  const int n = a.n();
  std::vector<GaussianMatrix> action;
  action.reserve(static_cast<size_t>(n) * n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      GaussianMatrix m = GaussianMatrix::Zero(a.dim() + b.dim(), a.dim() + b.dim());
      m.topLeftCorner(a.dim(), a.dim()) = a.elementary(j, k);
      m.bottomRightCorner(b.dim(), b.dim()) = b.elementary(j, k);
      action.push_back(std::move(m));
    }
  return LieRep(n, std::move(action));
}

LieRep tensorRep(const LieRep &a, const LieRep &b) {
  if (a.n() != b.n()) throw std::invalid_argument("tensorRep: mismatched rank");
  const int n = a.n();
  const GaussianMatrix idA = GaussianMatrix::Identity(a.dim(), a.dim());
  const GaussianMatrix idB = GaussianMatrix::Identity(b.dim(), b.dim());
  std::vector<GaussianMatrix> action;
  action.reserve(static_cast<size_t>(n) * n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      action.push_back(kron(a.elementary(j, k), idB) + kron(idA, b.elementary(j, k)));
  return LieRep(n, std::move(action));
}

LieRep traceShift(const LieRep &rep, const Rational &s) {
  const int n = rep.n();
  std::vector<GaussianMatrix> action;
  action.reserve(static_cast<size_t>(n) * n);
  const GaussianMatrix id = GaussianMatrix::Identity(rep.dim(), rep.dim());
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      GaussianMatrix m = rep.elementary(j, k);
      if (j == k) m += GaussianRational(s) * id; // tr E_jj = 1
      action.push_back(std::move(m));
    }
  return LieRep(n, std::move(action));
}

std::vector<std::pair<DominantWeight, int>> highestWeights(const LieRep &rep) {
  const int n = rep.n();
  const Eigen::Index dim = rep.dim();

  // Weight of each coordinate, read off the diagonal Cartan action.
  for (int j = 0; j < n; ++j) {
    const GaussianMatrix &h = rep.elementary(j, j);
    for (Eigen::Index r = 0; r < dim; ++r)
      for (Eigen::Index c = 0; c < dim; ++c)
        if (r != c && !h(r, c).isZero())
          throw std::invalid_argument("highestWeights: Cartan action is not diagonal");
    for (Eigen::Index r = 0; r < dim; ++r)
      if (!h(r, r).isReal())
        throw std::invalid_argument("highestWeights: non-real Cartan eigenvalue");
  }
  std::vector<std::vector<Rational>> weightOf(static_cast<size_t>(dim));
  for (Eigen::Index r = 0; r < dim; ++r) {
    weightOf[static_cast<size_t>(r)].reserve(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j)
      weightOf[static_cast<size_t>(r)].push_back(rep.elementary(j, j)(r, r).re);
  }

  // Stack the simple raising operators; highest weight vectors form their
  // joint kernel, computed per weight space (coordinate-aligned).
  GaussianMatrix raising(dim * std::max(n - 1, 1), dim);
  raising.setZero();
  for (int j = 0; j + 1 < n; ++j)
    raising.middleRows(dim * j, dim) = rep.elementary(j, j + 1);

  std::map<std::vector<Rational>, std::vector<Eigen::Index>> weightSpaces;
  for (Eigen::Index r = 0; r < dim; ++r) weightSpaces[weightOf[static_cast<size_t>(r)]].push_back(r);

  std::vector<std::pair<DominantWeight, int>> out;
  Integer total = 0;
  for (const auto &[weight, coords] : weightSpaces) {
    const GaussianMatrix sub = selectColumns(raising, coords);
    const auto mult = static_cast<int>(static_cast<Eigen::Index>(coords.size()) - exactRank(sub));
    if (mult == 0) continue;
    DominantWeight w{weight}; // throws if the extracted weight is not dominant
    total += Integer(mult) * weylDim(w);
    out.emplace_back(std::move(w), mult);
  }
  if (total != Integer(dim))
    throw std::logic_error("highestWeights: dimension count mismatch; input is not a "
                           "u(n) representation in a weight basis");
  std::sort(out.begin(), out.end(),
            [](const auto &a, const auto &b) { return a.first < b.first; });
  return out;
}

} // namespace cuspeta
