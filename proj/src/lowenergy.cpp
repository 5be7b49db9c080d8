#include "cuspeta/lowenergy.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <map>

namespace cuspeta {

namespace {

GaussianMatrix restrictRowsCols(const GaussianMatrix &m, const std::vector<int> &states) {
  return restrictTo(m, states);
}

} // namespace

LowEnergyOperator buildLowEnergy(int n, const LieRep &rep) {
  if (n < 2) throw std::invalid_argument("buildLowEnergy: complex dimension must be >= 2");
  if (rep.n() != n) throw std::invalid_argument("buildLowEnergy: representation rank mismatch");

  SpinorModule spinor(n);
  const std::vector<int> plus = spinor.gradedStates(true);
  const GaussianMatrix gammaT = spinor.generator(1, PairAxis::X);
  const GaussianMatrix gammaZ = spinor.generator(1, PairAxis::Y);

  const auto dimV = rep.dim();
  const GaussianMatrix idV = GaussianMatrix::Identity(dimV, dimV);
  const auto plusDim = static_cast<Eigen::Index>(plus.size());
  const GaussianRational i = GaussianRational::i();

  GaussianMatrix dx = GaussianMatrix::Zero(plusDim * dimV, plusDim * dimV);
  GaussianMatrix dz = GaussianMatrix::Zero(plusDim * dimV, plusDim * dimV);

  for (int j = 2; j <= n; ++j) {
    const GaussianMatrix gx = spinor.generator(j, PairAxis::X);
    const GaussianMatrix gy = spinor.generator(j, PairAxis::Y);
    // Horizontal part: rho on E_1j - E_j1 and -i(E_1j + E_j1).
    const GaussianMatrix rx = rep.elementary(0, j - 1) - rep.elementary(j - 1, 0);
    const GaussianMatrix ry = -i * (rep.elementary(0, j - 1) + rep.elementary(j - 1, 0));
    dx += kron(restrictRowsCols(GaussianMatrix(gammaT * gx), plus), rx);
    dx += kron(restrictRowsCols(GaussianMatrix(gammaT * gy), plus), ry);
    dz += Rational(1, 2) *
          kron(restrictRowsCols(GaussianMatrix(gammaT * gammaZ * gx * gy), plus), idV);
  }
  dz += kron(restrictRowsCols(GaussianMatrix(gammaT * gammaZ), plus),
             GaussianMatrix(-i * rep.elementary(0, 0)));

  LowEnergyOperator op{n, rep, plus, std::move(dx), std::move(dz), GaussianMatrix()};
  op.dle = op.dz + op.dx;

  const GaussianMatrix anti = op.dz * op.dx + op.dx * op.dz;
  for (Eigen::Index r = 0; r < anti.rows(); ++r)
    for (Eigen::Index c = 0; c < anti.cols(); ++c)
      if (!anti(r, c).isZero())
        throw std::logic_error("buildLowEnergy: {dz,dx} != 0, construction is inconsistent");
  if (!isHermitian(op.dx) || !isHermitian(op.dz))
    throw std::logic_error("buildLowEnergy: non-Hermitian block");
  return op;
}

std::vector<std::tuple<int, Rational, int>> HarmonicDecomposition::flatten() const {
  std::vector<std::tuple<int, Rational, int>> out;
  for (const auto &block : blocks)
    for (const auto &[value, mult] : block.centralEigenvalues)
      out.emplace_back(block.degree, value, mult);
  std::sort(out.begin(), out.end());
  return out;
}

HarmonicDecomposition harmonicDecompose(const LowEnergyOperator &op) {
  const auto dimV = op.rep.dim();
  const auto total = op.dx.rows();

  for (Eigen::Index r = 0; r < total; ++r)
    for (Eigen::Index c = 0; c < total; ++c)
      if (r != c && !op.dz(r, c).isZero())
        throw std::invalid_argument(
            "harmonicDecompose: dz is not diagonal in this basis; use the numeric path");

  const auto kernelTotal = static_cast<int>(exactKernelDim(op.dx));

  // Coordinates grouped by (degree, dz eigenvalue); the kernel splits
  // along these groups because dz is diagonal and preserves ker dx.
  std::map<std::pair<int, std::pair<Rational, Rational>>, std::vector<Eigen::Index>> groups;
  for (Eigen::Index idx = 0; idx < total; ++idx) {
    const int state = op.plusStates[static_cast<size_t>(idx / dimV)];
    const int degree = LowEnergyOperator::degreeOf(state);
    const GaussianRational d = op.dz(idx, idx);
    groups[{degree, {d.re, d.im}}].push_back(idx);
  }

  std::map<int, HarmonicBlock> blocks;
  int accounted = 0;
  for (const auto &[key, coords] : groups) {
    const auto &[degree, value] = key;
    if (!value.second.isZero())
      throw std::logic_error("harmonicDecompose: non-real dz diagonal entry");
    const GaussianMatrix sub = selectColumns(op.dx, coords);
    const auto dim = static_cast<int>(static_cast<Eigen::Index>(coords.size()) - exactRank(sub));
    if (dim == 0) continue;
    auto &block = blocks[degree];
    block.degree = degree;
    block.dim += dim;
    block.centralEigenvalues.emplace_back(value.first, dim);
    accounted += dim;
  }
  if (accounted != kernelTotal)
    throw std::logic_error("harmonicDecompose: kernel straddles grading blocks");

  HarmonicDecomposition out;
  out.kernelDim = kernelTotal;
  for (auto &[degree, block] : blocks) {
    std::sort(block.centralEigenvalues.begin(), block.centralEigenvalues.end());
    out.blocks.push_back(std::move(block));
  }
  return out;
}

HarmonicDecomposition harmonicDecomposeNumeric(const LowEnergyOperator &op) {
  const double kernelTol = 1e-7;
  const double clusterTol = 1e-8;
  const auto dimV = op.rep.dim();

  const Eigen::MatrixXcd dx = toComplex(op.dx);
  const Eigen::MatrixXcd dz = toComplex(op.dz);
  const Eigen::MatrixXcd kernel = kernelBasisNumeric(dx, kernelTol);

  HarmonicDecomposition out;
  out.kernelDim = static_cast<int>(kernel.cols());

  // Grading projections of the kernel must stay in the kernel.
  std::map<int, std::vector<Eigen::Index>> degreeCoords;
  for (Eigen::Index idx = 0; idx < dx.rows(); ++idx)
    degreeCoords[LowEnergyOperator::degreeOf(op.plusStates[static_cast<size_t>(idx / dimV)])]
        .push_back(idx);

  int accounted = 0;
  for (const auto &[degree, coords] : degreeCoords) {
    Eigen::MatrixXcd projected = Eigen::MatrixXcd::Zero(dx.rows(), kernel.cols());
    for (Eigen::Index c : coords) projected.row(c) = kernel.row(c);
    // Orthonormal basis of the projected span.
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(projected, Eigen::ComputeThinU);
    const auto &sv = svd.singularValues();
    Eigen::Index rank = 0;
    while (rank < sv.size() && sv[rank] > kernelTol * (1.0 + sv[0])) ++rank;
    if (rank == 0) continue;
    const Eigen::MatrixXcd basis = svd.matrixU().leftCols(rank);
    if ((dx * basis).norm() > kernelTol * (1.0 + dx.norm()) * std::sqrt(double(rank)))
      throw std::logic_error("harmonicDecomposeNumeric: kernel straddles grading blocks");

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
        Eigen::MatrixXcd(basis.adjoint() * dz * basis));
    const Eigen::VectorXd values = solver.eigenvalues();

    HarmonicBlock block;
    block.degree = degree;
    block.dim = static_cast<int>(rank);
    for (Eigen::Index v = 0; v < values.size();) {
      Eigen::Index w = v;
      while (w < values.size() && values[w] - values[v] <= clusterTol * (1.0 + std::abs(values[v])))
        ++w;
      const double mean = values.segment(v, w - v).mean();
      block.centralEigenvalues.emplace_back(approximateRational(mean, 1 << 12),
                                            static_cast<int>(w - v));
      v = w;
    }
    accounted += block.dim;
    out.blocks.push_back(std::move(block));
  }
  if (accounted != out.kernelDim)
    throw std::logic_error("harmonicDecomposeNumeric: grading dimensions do not add up");
  return out;
}

int etaFinite(const GaussianMatrix &hermitian) { return hermitianSignature(hermitian); }

int etaFiniteNumeric(const Eigen::MatrixXcd &hermitian) {
  return hermitianSignatureNumeric(hermitian, 1e-7);
}

} // namespace cuspeta
