#pragma once

#include "cuspeta/rational.hpp"

#include <Eigen/Dense>

#include <complex>
#include <vector>

namespace Eigen {

template <> struct NumTraits<cuspeta::Rational> {
  using Real = cuspeta::Rational;
  using NonInteger = cuspeta::Rational;
  using Literal = cuspeta::Rational;
  using Nested = cuspeta::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 30,
    MulCost = 30
  };
  static cuspeta::Rational epsilon() { return cuspeta::Rational(0); }
  static cuspeta::Rational dummy_precision() { return cuspeta::Rational(0); }
  static int digits10() { return 0; }
};

template <> struct NumTraits<cuspeta::GaussianRational> {
  using Real = cuspeta::Rational;
  using NonInteger = cuspeta::GaussianRational;
  using Literal = cuspeta::GaussianRational;
  using Nested = cuspeta::GaussianRational;
  enum {
    IsComplex = 1,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 16,
    AddCost = 60,
    MulCost = 60
  };
  static cuspeta::Rational epsilon() { return cuspeta::Rational(0); }
  static cuspeta::Rational dummy_precision() { return cuspeta::Rational(0); }
  static int digits10() { return 0; }
};

} // namespace Eigen

namespace cuspeta {

using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using GaussianMatrix = Eigen::Matrix<GaussianRational, Eigen::Dynamic, Eigen::Dynamic>;
using GaussianVector = Eigen::Matrix<GaussianRational, Eigen::Dynamic, 1>;

GaussianMatrix toGaussian(const RationalMatrix &m);
Eigen::MatrixXcd toComplex(const GaussianMatrix &m);

template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>
kron(const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> &a,
     const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> &b) {
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out(a.rows() * b.rows(),
                                                            a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

/// Selects the given rows and columns, in order.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>
restrictTo(const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> &m,
           const std::vector<int> &indices) {
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out(indices.size(), indices.size());
  for (size_t i = 0; i < indices.size(); ++i)
    for (size_t j = 0; j < indices.size(); ++j) out(i, j) = m(indices[i], indices[j]);
  return out;
}

template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>
selectColumns(const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> &m,
              const std::vector<Eigen::Index> &cols) {
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out(m.rows(),
                                                            static_cast<Eigen::Index>(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j) out.col(static_cast<Eigen::Index>(j)) = m.col(cols[j]);
  return out;
}

/// Rank over the exact scalar field (argument is consumed).
template <typename Scalar>
Eigen::Index exactRank(Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> m) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  Eigen::Index rank = 0;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = row; r < rows; ++r)
      if (m(r, col) != Scalar(0)) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != row) m.row(pivot).swap(m.row(row));
    const Scalar inv = Scalar(1) / m(row, col);
    for (Eigen::Index r = row + 1; r < rows; ++r) {
      if (m(r, col) == Scalar(0)) continue;
      const Scalar f = m(r, col) * inv;
      for (Eigen::Index c = col; c < cols; ++c) m(r, c) -= f * m(row, c);
    }
    ++row;
    ++rank;
  }
  return rank;
}

/// Columns form an exact basis of the kernel.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>
exactKernelBasis(Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> m) {
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const Eigen::Index rows = m.rows(), cols = m.cols();
  std::vector<Eigen::Index> pivotCol;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = row; r < rows; ++r)
      if (m(r, col) != Scalar(0)) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != row) m.row(pivot).swap(m.row(row));
    const Scalar inv = Scalar(1) / m(row, col);
    for (Eigen::Index c = col; c < cols; ++c) m(row, c) *= inv;
    for (Eigen::Index r = 0; r < rows; ++r) {
      if (r == row || m(r, col) == Scalar(0)) continue;
      const Scalar f = m(r, col);
      for (Eigen::Index c = col; c < cols; ++c) m(r, c) -= f * m(row, c);
    }
    pivotCol.push_back(col);
    ++row;
  }
  std::vector<Eigen::Index> freeCols;
  {
    size_t next = 0;
    for (Eigen::Index c = 0; c < cols; ++c) {
      if (next < pivotCol.size() && pivotCol[next] == c)
        ++next;
      else
        freeCols.push_back(c);
    }
  }
  Matrix basis = Matrix::Zero(cols, static_cast<Eigen::Index>(freeCols.size()));
  for (size_t j = 0; j < freeCols.size(); ++j) {
    basis(freeCols[j], static_cast<Eigen::Index>(j)) = Scalar(1);
    for (size_t i = 0; i < pivotCol.size(); ++i)
      basis(pivotCol[i], static_cast<Eigen::Index>(j)) =
          -m(static_cast<Eigen::Index>(i), freeCols[j]);
  }
  return basis;
}

template <typename Scalar>
Eigen::Index exactKernelDim(const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> &m) {
  return m.cols() - exactRank(m);
}

bool isHermitian(const GaussianMatrix &m);

/// Signature (#positive - #negative eigenvalues) of an exact Hermitian matrix,
/// computed by congruence reduction; no eigenvalues are ever extracted.
int hermitianSignature(GaussianMatrix h);

/// Float-path counterpart: signs of eigenvalues with |lambda| <= relTol*|M|
/// treated as zero.
int hermitianSignatureNumeric(const Eigen::MatrixXcd &h, double relTol = 1e-7);

/// Orthonormal kernel basis of a complex matrix via SVD; singular values below
/// relTol * (largest singular value) count as zero.
Eigen::MatrixXcd kernelBasisNumeric(const Eigen::MatrixXcd &m, double relTol = 1e-7);

} // namespace cuspeta
