// Hot numeric loops, each in three forms: a serial reference, an OpenMP
// variant, and an unqualified dispatcher that picks one at runtime via
// ParallelConfig.  Both variants call the same per-item bodies and combine
// in the same index order, so results agree to the last bit and the serial
// form stays the test oracle.

#pragma once

#include "finrep/groups.hpp"
#include "finrep/linalg.hpp"

#include <vector>

namespace finrep {

bool openmp_available();
int openmp_max_threads();

// max over pairs (g,h) of |mats[g]*mats[h] - mats[gh]|_inf, plus the identity
// deviation |mats[e] - I|_inf
double homomorphism_deviation_serial(const FiniteGroup& g, const std::vector<CMat>& mats);
double homomorphism_deviation_omp(const FiniteGroup& g, const std::vector<CMat>& mats);
double homomorphism_deviation(const FiniteGroup& g, const std::vector<CMat>& mats);

// P_chi = (1/|A|) sum_a conj(chi(a)) pi(a), one matrix per character index
std::vector<CMat> fourier_projectors_serial(const FiniteAbelianGroup& a,
                                            const std::vector<CMat>& mats);
std::vector<CMat> fourier_projectors_omp(const FiniteAbelianGroup& a,
                                         const std::vector<CMat>& mats);
std::vector<CMat> fourier_projectors(const FiniteAbelianGroup& a, const std::vector<CMat>& mats);

// pi(a) = sum_chi chi(a) atoms[chi], one matrix per element index
std::vector<CMat> reconstruct_from_atoms_serial(const FiniteAbelianGroup& a,
                                                const std::vector<CMat>& atoms);
std::vector<CMat> reconstruct_from_atoms_omp(const FiniteAbelianGroup& a,
                                             const std::vector<CMat>& atoms);
std::vector<CMat> reconstruct_from_atoms(const FiniteAbelianGroup& a,
                                         const std::vector<CMat>& atoms);

// (1/n) sum_g mats[g] * x * inv_mats[g], summed in index order
CMat average_conjugation_serial(const std::vector<CMat>& mats, const std::vector<CMat>& inv_mats,
                                const CMat& x);
CMat average_conjugation_omp(const std::vector<CMat>& mats, const std::vector<CMat>& inv_mats,
                             const CMat& x);
CMat average_conjugation(const std::vector<CMat>& mats, const std::vector<CMat>& inv_mats,
                         const CMat& x);

// max over (h,chi) of |pi2[h] * atoms[chi] * pi2_inv[h] - atoms[h[chi]]|_inf
double covariance_deviation_serial(const DualActionHom& dual, const std::vector<CMat>& pi2,
                                   const std::vector<CMat>& pi2_inv,
                                   const std::vector<CMat>& atoms);
double covariance_deviation_omp(const DualActionHom& dual, const std::vector<CMat>& pi2,
                                const std::vector<CMat>& pi2_inv, const std::vector<CMat>& atoms);
double covariance_deviation(const DualActionHom& dual, const std::vector<CMat>& pi2,
                            const std::vector<CMat>& pi2_inv, const std::vector<CMat>& atoms);

}  // namespace finrep
