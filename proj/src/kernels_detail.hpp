// Per-item bodies shared by the serial and OpenMP kernel variants.  Both
// loops call these, so the variants agree bitwise and differ only in how the
// index space is scheduled.

#pragma once

#include "finrep/groups.hpp"
#include "finrep/linalg.hpp"

#include <vector>

namespace finrep::detail {

double pair_deviation(const FiniteGroup& g, const std::vector<CMat>& mats, int x, int y);

// P_chi = (1/|A|) sum_x conj(chi(x)) mats[x]
CMat fourier_atom(const FiniteAbelianGroup& a, const std::vector<CMat>& mats, int chi);

// pi(x) = sum_chi chi(x) atoms[chi]
CMat reconstruct_at(const FiniteAbelianGroup& a, const std::vector<CMat>& atoms, int x);

CMat conjugation_term(const std::vector<CMat>& mats, const std::vector<CMat>& inv_mats,
                      const CMat& x, int g);

double covariance_cell(const DualActionHom& dual, const std::vector<CMat>& pi2,
                       const std::vector<CMat>& pi2_inv, const std::vector<CMat>& atoms, int h,
                       int chi);

}  // namespace finrep::detail
