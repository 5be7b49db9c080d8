#include "cuspeta/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <numeric>

namespace cuspeta {

GaussianMatrix toGaussian(const RationalMatrix &m) {
  GaussianMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = GaussianRational(m(i, j));
  return out;
}

Eigen::MatrixXcd toComplex(const GaussianMatrix &m) {
  Eigen::MatrixXcd out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      out(i, j) = std::complex<double>(toDouble(m(i, j).re), toDouble(m(i, j).im));
  return out;
}

bool isHermitian(const GaussianMatrix &m) {
  if (m.rows() != m.cols()) return false;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = i; j < m.cols(); ++j)
      if (m(i, j) != conj(m(j, i))) return false;
  return true;
}

int hermitianSignature(GaussianMatrix h) {
  if (!isHermitian(h)) throw std::invalid_argument("hermitianSignature: matrix is not Hermitian");
  std::vector<Eigen::Index> active(h.rows());
  std::iota(active.begin(), active.end(), 0);
  int signature = 0;
  while (!active.empty()) {
    size_t pivotPos = active.size();
    for (size_t t = 0; t < active.size(); ++t)
      if (!h(active[t], active[t]).isZero()) {
        pivotPos = t;
        break;
      }
    if (pivotPos == active.size()) {
      // Zero diagonal: fold the first nonzero off-diagonal entry onto the
      // diagonal by the congruence e_i <- e_i + conj(h_ij) e_j.
      Eigen::Index fi = -1, fj = -1;
      for (size_t s = 0; s < active.size() && fi < 0; ++s)
        for (size_t t = s + 1; t < active.size(); ++t)
          if (!h(active[s], active[t]).isZero()) {
            fi = active[s];
            fj = active[t];
            break;
          }
      if (fi < 0) break; // remaining block vanishes
      const GaussianRational c = conj(h(fi, fj));
      for (Eigen::Index r : active) h(r, fi) += h(r, fj) * c;
      const GaussianRational cc = conj(c);
      for (Eigen::Index s : active) h(fi, s) += cc * h(fj, s);
      continue;
    }
    const Eigen::Index p = active[pivotPos];
    const Rational d = h(p, p).re;
    signature += d.sign();
    active.erase(active.begin() + static_cast<std::ptrdiff_t>(pivotPos));
    const Rational invD = Rational(1) / d;
    for (Eigen::Index i : active) {
      if (h(i, p).isZero()) continue;
      const GaussianRational f = h(i, p) * invD;
      for (Eigen::Index j : active) h(i, j) -= f * conj(h(j, p));
    }
    for (Eigen::Index i : active) {
      h(i, p) = GaussianRational(0);
      h(p, i) = GaussianRational(0);
    }
  }
  return signature;
}

int hermitianSignatureNumeric(const Eigen::MatrixXcd &h, double relTol) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd values = solver.eigenvalues();
  const double scale = values.size() == 0 ? 0.0 : values.cwiseAbs().maxCoeff();
  const double tol = relTol * (1.0 + scale);
  int signature = 0;
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    if (values[i] > tol)
      ++signature;
    else if (values[i] < -tol)
      --signature;
  }
  return signature;
}

Eigen::MatrixXcd kernelBasisNumeric(const Eigen::MatrixXcd &m, double relTol) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeFullV);
  const Eigen::VectorXd sv = svd.singularValues();
  const double scale = sv.size() == 0 ? 0.0 : sv[0];
  const double tol = relTol * (1.0 + scale);
  Eigen::Index rank = 0;
  while (rank < sv.size() && sv[rank] > tol) ++rank;
  return svd.matrixV().rightCols(m.cols() - rank);
}

} // namespace cuspeta
