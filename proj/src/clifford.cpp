#include "cuspeta/clifford.hpp"

namespace cuspeta {

namespace {

int fermionSign(int state, int mode) {
  // Parity of occupied modes strictly below `mode`.
  const int below = state & ((1 << (mode - 1)) - 1);
  return __builtin_popcount(static_cast<unsigned>(below)) % 2 == 0 ? 1 : -1;
}

} // namespace

SpinorModule::SpinorModule(int modes) : modes_(modes) {
  if (modes < 1 || modes > 16) throw std::invalid_argument("SpinorModule: modes out of range");
}

int SpinorModule::occupationCount(int state) const {
  return __builtin_popcount(static_cast<unsigned>(state));
}

GaussianMatrix SpinorModule::creation(int mode) const {
  GaussianMatrix out = GaussianMatrix::Zero(dim(), dim());
  const int bit = 1 << (mode - 1);
  for (int state = 0; state < dim(); ++state) {
    if (state & bit) continue;
    out(state | bit, state) = GaussianRational(fermionSign(state, mode));
  }
  return out;
}

GaussianMatrix SpinorModule::annihilation(int mode) const {
  GaussianMatrix out = GaussianMatrix::Zero(dim(), dim());
  const int bit = 1 << (mode - 1);
  for (int state = 0; state < dim(); ++state) {
    if (!(state & bit)) continue;
    out(state & ~bit, state) = GaussianRational(fermionSign(state & ~bit, mode));
  }
  return out;
}

GaussianMatrix SpinorModule::generator(int mode, PairAxis axis) const {
  if (mode < 1 || mode > modes_) throw std::invalid_argument("SpinorModule: mode out of range");
  const GaussianMatrix up = creation(mode);
  const GaussianMatrix down = annihilation(mode);
  if (axis == PairAxis::X) return up - down;
  return GaussianRational::i() * (up + down);
}

GaussianMatrix SpinorModule::involution(int mode) const {
  if (mode < 1 || mode > modes_) throw std::invalid_argument("SpinorModule: mode out of range");
  GaussianMatrix out = GaussianMatrix::Zero(dim(), dim());
  for (int state = 0; state < dim(); ++state)
    out(state, state) = GaussianRational(occupied(state, mode) ? -1 : 1);
  return out;
}

GaussianMatrix SpinorModule::volumeGrading() const {
  GaussianMatrix out = GaussianMatrix::Zero(dim(), dim());
  for (int state = 0; state < dim(); ++state)
    out(state, state) = GaussianRational(occupationCount(state) % 2 == 0 ? 1 : -1);
  return out;
}

std::vector<int> SpinorModule::gradedStates(bool plus) const {
  std::vector<int> out;
  for (int state = 0; state < dim(); ++state)
    if ((occupationCount(state) % 2 == 0) == plus) out.push_back(state);
  return out;
}

GaussianMatrix SpinorModule::spinLift(const RationalMatrix &b) const {
  return spinLiftComplex(toGaussian(b));
}

GaussianMatrix SpinorModule::spinLiftComplex(const GaussianMatrix &b) const {
  const Eigen::Index k = 2 * modes_;
  if (b.rows() != k || b.cols() != k)
    throw std::invalid_argument("spinLift: expected a 2n x 2n matrix");
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = 0; j <= i; ++j)
      if (b(i, j) != -b(j, i)) throw std::invalid_argument("spinLift: matrix is not antisymmetric");

  std::vector<GaussianMatrix> gamma;
  gamma.reserve(k);
  for (int mode = 1; mode <= modes_; ++mode) {
    gamma.push_back(generator(mode, PairAxis::X));
    gamma.push_back(generator(mode, PairAxis::Y));
  }
  GaussianMatrix out = GaussianMatrix::Zero(dim(), dim());
  const Rational quarter(1, 4);
  for (Eigen::Index l = 0; l < k; ++l)
    for (Eigen::Index m = 0; m < k; ++m) {
      if (b(m, l).isZero()) continue;
      out += (quarter * b(m, l)) * (gamma[l] * gamma[m]);
    }
  return out;
}

} // namespace cuspeta
