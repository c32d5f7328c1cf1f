#include "finrep/kernels.hpp"

#include "kernels_detail.hpp"

#include <stdexcept>

namespace finrep {

namespace detail {

double pair_deviation(const FiniteGroup& g, const std::vector<CMat>& mats, int x, int y) {
  return max_abs(CMat(mats[x] * mats[y] - mats[g.times(x, y)]));
}

CMat fourier_atom(const FiniteAbelianGroup& a, const std::vector<CMat>& mats, int chi) {
  const Eigen::Index d = mats[0].rows();
  CMat p = CMat::Zero(d, d);
  for (int x = 0; x < a.size(); ++x) p += std::conj(char_value(a, chi, x)) * mats[x];
  return p / static_cast<double>(a.size());
}

CMat reconstruct_at(const FiniteAbelianGroup& a, const std::vector<CMat>& atoms, int x) {
  const Eigen::Index d = atoms[0].rows();
  CMat m = CMat::Zero(d, d);
  for (int chi = 0; chi < a.size(); ++chi) m += char_value(a, chi, x) * atoms[chi];
  return m;
}

CMat conjugation_term(const std::vector<CMat>& mats, const std::vector<CMat>& inv_mats,
                      const CMat& x, int g) {
  return mats[g] * x * inv_mats[g];
}

double covariance_cell(const DualActionHom& dual, const std::vector<CMat>& pi2,
                       const std::vector<CMat>& pi2_inv, const std::vector<CMat>& atoms, int h,
                       int chi) {
  return max_abs(CMat(pi2[h] * atoms[chi] * pi2_inv[h] - atoms[dual.perm[h][chi]]));
}

}  // namespace detail

double homomorphism_deviation_serial(const FiniteGroup& g, const std::vector<CMat>& mats) {
  if (static_cast<int>(mats.size()) != g.size)
    throw std::invalid_argument("homomorphism_deviation: one matrix per element required");
  const Eigen::Index d = mats.empty() ? 0 : mats[0].rows();
  double dev = max_abs(CMat(mats[g.identity] - CMat::Identity(d, d)));
  for (int x = 0; x < g.size; ++x)
    for (int y = 0; y < g.size; ++y) {
      const double e = detail::pair_deviation(g, mats, x, y);
      if (e > dev) dev = e;
    }
  return dev;
}

std::vector<CMat> fourier_projectors_serial(const FiniteAbelianGroup& a,
                                            const std::vector<CMat>& mats) {
  if (static_cast<int>(mats.size()) != a.size())
    throw std::invalid_argument("fourier_projectors: one matrix per element required");
  std::vector<CMat> atoms(a.size());
  for (int chi = 0; chi < a.size(); ++chi) atoms[chi] = detail::fourier_atom(a, mats, chi);
  return atoms;
}

std::vector<CMat> reconstruct_from_atoms_serial(const FiniteAbelianGroup& a,
                                                const std::vector<CMat>& atoms) {
  if (static_cast<int>(atoms.size()) != a.size())
    throw std::invalid_argument("reconstruct_from_atoms: one matrix per character required");
  std::vector<CMat> mats(a.size());
  for (int x = 0; x < a.size(); ++x) mats[x] = detail::reconstruct_at(a, atoms, x);
  return mats;
}

CMat average_conjugation_serial(const std::vector<CMat>& mats, const std::vector<CMat>& inv_mats,
                                const CMat& x) {
  if (mats.size() != inv_mats.size() || mats.empty())
    throw std::invalid_argument("average_conjugation: matching nonempty matrix lists required");
  CMat acc = CMat::Zero(x.rows(), x.cols());
  for (size_t g = 0; g < mats.size(); ++g)
    acc += detail::conjugation_term(mats, inv_mats, x, static_cast<int>(g));
  return acc / static_cast<double>(mats.size());
}

double covariance_deviation_serial(const DualActionHom& dual, const std::vector<CMat>& pi2,
                                   const std::vector<CMat>& pi2_inv,
                                   const std::vector<CMat>& atoms) {
  double dev = 0.0;
  for (int h = 0; h < dual.h->size; ++h)
    for (int chi = 0; chi < dual.a.size(); ++chi) {
      const double e = detail::covariance_cell(dual, pi2, pi2_inv, atoms, h, chi);
      if (e > dev) dev = e;
    }
  return dev;
}

}  // namespace finrep
