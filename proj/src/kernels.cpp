#include "finrep/kernels.hpp"

#include "finrep/config.hpp"

namespace finrep {

std::atomic<bool>& ParallelConfig::enabled() {
  static std::atomic<bool> on{true};
  return on;
}

namespace {
bool use_omp() { return openmp_available() && ParallelConfig::enabled().load(); }
}  // namespace

double homomorphism_deviation(const FiniteGroup& g, const std::vector<CMat>& mats) {
  return use_omp() ? homomorphism_deviation_omp(g, mats) : homomorphism_deviation_serial(g, mats);
}

std::vector<CMat> fourier_projectors(const FiniteAbelianGroup& a, const std::vector<CMat>& mats) {
  return use_omp() ? fourier_projectors_omp(a, mats) : fourier_projectors_serial(a, mats);
}

std::vector<CMat> reconstruct_from_atoms(const FiniteAbelianGroup& a,
                                         const std::vector<CMat>& atoms) {
  return use_omp() ? reconstruct_from_atoms_omp(a, atoms) : reconstruct_from_atoms_serial(a, atoms);
}

CMat average_conjugation(const std::vector<CMat>& mats, const std::vector<CMat>& inv_mats,
                         const CMat& x) {
  return use_omp() ? average_conjugation_omp(mats, inv_mats, x)
                   : average_conjugation_serial(mats, inv_mats, x);
}

double covariance_deviation(const DualActionHom& dual, const std::vector<CMat>& pi2,
                            const std::vector<CMat>& pi2_inv, const std::vector<CMat>& atoms) {
  return use_omp() ? covariance_deviation_omp(dual, pi2, pi2_inv, atoms)
                   : covariance_deviation_serial(dual, pi2, pi2_inv, atoms);
}

}  // namespace finrep
