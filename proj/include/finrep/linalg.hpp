// Thin dense complex linear-algebra layer: one matrix type plus the few
// decompositions the rest of the code needs (Eigen does the heavy lifting).

#pragma once

#define EIGEN_DONT_PARALLELIZE
#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

namespace finrep {

using Complex = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using Rng = std::mt19937_64;

inline double max_abs(const CMat& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

inline double max_abs(const CVec& v) {
  return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff();
}

// exp(2*pi*i*phase)
Complex unit_phase(double phase);

// Entries uniform in [-1,1] + i[-1,1].
CMat random_matrix(int rows, int cols, Rng& rng);

// Random invertible matrix with 2-norm condition number at most max_cond
// (regenerates until the bound holds; deterministic for a fixed rng state).
CMat random_invertible(int dim, Rng& rng, double max_cond = 300.0);

// Orthonormal basis of the range of m, as columns.  Rank is the number of
// singular values above cutoff.
CMat range_basis_svd(const CMat& m, double cutoff);

// Same, but via column-pivoted QR on the columns of m (pivoting by
// descending norm).  Used for stalk bases.
CMat range_basis_qr(const CMat& m, double cutoff);

// Orthonormal basis of the null space of m (right null vectors), as columns.
// Cutoff is relative to the largest singular value.
CMat null_space(const CMat& m, double rel_cutoff);

// Eigenvalues grouped into clusters of radius tol.  Returns cluster labels
// per eigenvalue and the cluster count; labels follow the order in which
// clusters are first seen when eigenvalues are sorted by (re, im).
struct EigenClusters {
  Eigen::VectorXcd values;
  CMat vectors;                 // columns are eigenvectors
  std::vector<int> label;       // per eigenvalue
  int count = 0;
};
EigenClusters clustered_eigensolve(const CMat& m, double tol);

// 2-norm condition number.
double cond2(const CMat& m);

}  // namespace finrep
