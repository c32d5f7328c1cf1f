#include "finrep/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace finrep {

Complex unit_phase(double phase) {
  const double t = 2.0 * std::numbers::pi * phase;
  return {std::cos(t), std::sin(t)};
}

CMat random_matrix(int rows, int cols, Rng& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  CMat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      m(i, j) = Complex(u(rng), u(rng));
  return m;
}

double cond2(const CMat& m) {
  Eigen::JacobiSVD<CMat> svd(m);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(s.size() - 1) <= 0.0) return std::numeric_limits<double>::infinity();
  return s(0) / s(s.size() - 1);
}

CMat random_invertible(int dim, Rng& rng, double max_cond) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    CMat m = random_matrix(dim, dim, rng);
    if (cond2(m) <= max_cond) return m;
  }
  throw std::runtime_error("random_invertible: no well-conditioned sample after 64 draws");
}

CMat range_basis_svd(const CMat& m, double cutoff) {
  Eigen::JacobiSVD<CMat> svd(m, Eigen::ComputeThinU);
  const auto& s = svd.singularValues();
  int rank = 0;
  while (rank < s.size() && s(rank) > cutoff) ++rank;
  return svd.matrixU().leftCols(rank);
}

CMat range_basis_qr(const CMat& m, double cutoff) {
  Eigen::ColPivHouseholderQR<CMat> qr(m);
  const CMat r = qr.matrixQR().triangularView<Eigen::Upper>();
  int rank = 0;
  const int k = std::min(m.rows(), m.cols());
  for (int i = 0; i < k; ++i)
    if (std::abs(r(i, i)) > cutoff) ++rank; else break;
  CMat q = qr.householderQ() * CMat::Identity(m.rows(), rank);
  return q;
}

CMat null_space(const CMat& m, double rel_cutoff) {
  Eigen::JacobiSVD<CMat> svd(m, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  const double top = s.size() > 0 ? s(0) : 0.0;
  const double cut = rel_cutoff * std::max(1.0, top);
  int rank = 0;
  while (rank < s.size() && s(rank) > cut) ++rank;
  return svd.matrixV().rightCols(m.cols() - rank);
}

EigenClusters clustered_eigensolve(const CMat& m, double tol) {
  Eigen::ComplexEigenSolver<CMat> es(m);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("clustered_eigensolve: eigensolver failed");
  EigenClusters out;
  out.values = es.eigenvalues();
  out.vectors = es.eigenvectors();
  const int n = static_cast<int>(out.values.size());
  out.label.assign(n, -1);

  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const Complex va = out.values(a), vb = out.values(b);
    if (va.real() != vb.real()) return va.real() < vb.real();
    return va.imag() < vb.imag();
  });

  std::vector<Complex> centers;
  for (int idx : order) {
    const Complex v = out.values(idx);
    int found = -1;
    for (int c = 0; c < static_cast<int>(centers.size()); ++c)
      if (std::abs(v - centers[c]) <= tol) { found = c; break; }
    if (found < 0) {
      centers.push_back(v);
      found = static_cast<int>(centers.size()) - 1;
    }
    out.label[idx] = found;
  }
  out.count = static_cast<int>(centers.size());
  return out;
}

}  // namespace finrep
