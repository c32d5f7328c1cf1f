#include "finrep/kernels.hpp"

#include "kernels_detail.hpp"

#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace finrep {

bool openmp_available() {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

int openmp_max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

#ifdef _OPENMP

double homomorphism_deviation_omp(const FiniteGroup& g, const std::vector<CMat>& mats) {
  if (static_cast<int>(mats.size()) != g.size)
    throw std::invalid_argument("homomorphism_deviation: one matrix per element required");
  const Eigen::Index d = mats.empty() ? 0 : mats[0].rows();
  double dev = max_abs(CMat(mats[g.identity] - CMat::Identity(d, d)));
  const long long pairs = static_cast<long long>(g.size) * g.size;
#pragma omp parallel for reduction(max : dev) schedule(static)
  for (long long p = 0; p < pairs; ++p) {
    const int x = static_cast<int>(p / g.size), y = static_cast<int>(p % g.size);
    const double e = detail::pair_deviation(g, mats, x, y);
    if (e > dev) dev = e;
  }
  return dev;
}

std::vector<CMat> fourier_projectors_omp(const FiniteAbelianGroup& a,
                                         const std::vector<CMat>& mats) {
  if (static_cast<int>(mats.size()) != a.size())
    throw std::invalid_argument("fourier_projectors: one matrix per element required");
  std::vector<CMat> atoms(a.size());
#pragma omp parallel for schedule(static)
  for (int chi = 0; chi < a.size(); ++chi) atoms[chi] = detail::fourier_atom(a, mats, chi);
  return atoms;
}

std::vector<CMat> reconstruct_from_atoms_omp(const FiniteAbelianGroup& a,
                                             const std::vector<CMat>& atoms) {
  if (static_cast<int>(atoms.size()) != a.size())
    throw std::invalid_argument("reconstruct_from_atoms: one matrix per character required");
  std::vector<CMat> mats(a.size());
#pragma omp parallel for schedule(static)
  for (int x = 0; x < a.size(); ++x) mats[x] = detail::reconstruct_at(a, atoms, x);
  return mats;
}

CMat average_conjugation_omp(const std::vector<CMat>& mats, const std::vector<CMat>& inv_mats,
                             const CMat& x) {
  if (mats.size() != inv_mats.size() || mats.empty())
    throw std::invalid_argument("average_conjugation: matching nonempty matrix lists required");
  const int n = static_cast<int>(mats.size());
  std::vector<CMat> terms(n);
#pragma omp parallel for schedule(static)
  for (int g = 0; g < n; ++g) terms[g] = detail::conjugation_term(mats, inv_mats, x, g);
  // combine serially in index order so the sum matches the reference bitwise
  CMat acc = CMat::Zero(x.rows(), x.cols());
  for (int g = 0; g < n; ++g) acc += terms[g];
  return acc / static_cast<double>(n);
}

double covariance_deviation_omp(const DualActionHom& dual, const std::vector<CMat>& pi2,
                                const std::vector<CMat>& pi2_inv,
                                const std::vector<CMat>& atoms) {
  double dev = 0.0;
  const long long cells = static_cast<long long>(dual.h->size) * dual.a.size();
#pragma omp parallel for reduction(max : dev) schedule(static)
  for (long long c = 0; c < cells; ++c) {
    const int h = static_cast<int>(c / dual.a.size());
    const int chi = static_cast<int>(c % dual.a.size());
    const double e = detail::covariance_cell(dual, pi2, pi2_inv, atoms, h, chi);
    if (e > dev) dev = e;
  }
  return dev;
}

#else  // no OpenMP at build time: the parallel names fall through to the reference

double homomorphism_deviation_omp(const FiniteGroup& g, const std::vector<CMat>& mats) {
  return homomorphism_deviation_serial(g, mats);
}

std::vector<CMat> fourier_projectors_omp(const FiniteAbelianGroup& a,
                                         const std::vector<CMat>& mats) {
  return fourier_projectors_serial(a, mats);
}

std::vector<CMat> reconstruct_from_atoms_omp(const FiniteAbelianGroup& a,
                                             const std::vector<CMat>& atoms) {
  return reconstruct_from_atoms_serial(a, atoms);
}

CMat average_conjugation_omp(const std::vector<CMat>& mats, const std::vector<CMat>& inv_mats,
                             const CMat& x) {
  return average_conjugation_serial(mats, inv_mats, x);
}

double covariance_deviation_omp(const DualActionHom& dual, const std::vector<CMat>& pi2,
                                const std::vector<CMat>& pi2_inv,
                                const std::vector<CMat>& atoms) {
  return covariance_deviation_serial(dual, pi2, pi2_inv, atoms);
}

#endif

}  // namespace finrep
